# -*- coding: UTF-8 -*-
# pylint:disable=missing-function-docstring
import pytest

from homhopf.config import Configuration


def test_defaults():
    config = Configuration()
    assert config.log_level == "WARNING"
    assert config.default_k == "2"
    assert config.indent == 2
    assert config.witnesses
    assert Configuration.from_file(None) == config


def test_from_file(shared_datadir):
    config = Configuration.from_file(shared_datadir / "homhopf_test.yaml")
    assert config.log_level == "DEBUG"
    assert config.default_k == "3/2"
    assert config.indent == 4
    assert not config.witnesses
    assert config != Configuration()


def test_partial():
    config = Configuration({"output": {"indent": 0}})
    assert config.indent == 0
    assert config.log_level == "WARNING"


def test_invalid_level(shared_datadir):
    with pytest.raises(ValueError):
        Configuration.from_file(shared_datadir / "homhopf_bad_level.yaml")


@pytest.mark.parametrize("data", [
    {"output": {"indent": -1}},
    {"catalog": {"default_k": "two"}},
    {"colour": True},
])
def test_invalid(data):
    with pytest.raises(ValueError):
        Configuration(data)


def test_not_a_mapping(tmp_path):
    path = tmp_path / "list.yaml"
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError):
        Configuration.from_file(path)


def test_broken_yaml(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("logging: [\n", encoding="utf-8")
    with pytest.raises(ValueError):
        Configuration.from_file(path)
