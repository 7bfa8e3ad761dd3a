# cSpell:ignore homhopf cobraiding
import sys
import cProfile
import pstats

sys.path.append("..")
from homhopf.catalog import catalog_section5_sigma, catalog_section5_smash
from homhopf.cobraid import check_cobraiding
from homhopf.homcore import check_all


def runme():
    """Fn to profile"""
    for k in ("2", "3/2"):
        product = catalog_section5_smash(k)
        _ = check_all(product.underlying)
        _ = check_cobraiding(product.underlying, catalog_section5_sigma(k))


if __name__ == '__main__':

    profiler = cProfile.Profile()
    profiler.enable()
    runme()
    profiler.disable()
    stats = pstats.Stats(profiler)
    stats.dump_stats('data_section5.perf')
