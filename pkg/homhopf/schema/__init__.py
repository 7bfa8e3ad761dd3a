from importlib.resources import files
import json


algebra_schema = json.loads(files('homhopf.schema').joinpath('algebra.json').read_text(encoding='utf-8'))
form_schema = json.loads(files('homhopf.schema').joinpath('form.json').read_text(encoding='utf-8'))
twist_schema = json.loads(files('homhopf.schema').joinpath('twist.json').read_text(encoding='utf-8'))
action_schema = json.loads(files('homhopf.schema').joinpath('action.json').read_text(encoding='utf-8'))
config_schema = json.loads(files('homhopf.schema').joinpath('config.json').read_text(encoding='utf-8'))
