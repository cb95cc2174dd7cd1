"""
Cache scoping tests.

a_p tables and period maps are keyed by model and conductor; a cache written
for one curve must never be served for another, and a damaged file is
rebuilt rather than trusted.
"""

import pytest

from src.core.constants import PERIOD_MAP_MAGIC
from src.curve import CurveData, ap_cache_path, ap_table
from src.curve.coefficients import clear_memory_cache
from src.maninsym import dump_period_map, period_map_for, period_map_path

pytestmark = pytest.mark.integration


class TestEnvironmentOverride:
    def test_default_cache_dir_is_env(self, e11, cache_dir):
        period_map_for(e11)
        assert period_map_path(e11).parent == cache_dir
        assert period_map_path(e11).exists()

    def test_no_cache_writes_nothing(self, e11, cache_dir):
        period_map_for(e11, use_cache=False)
        assert not list(cache_dir.glob("phi_*"))


class TestPerCurveScoping:
    def test_relabelled_model_gets_own_files(self, e11, cache_dir):
        other = CurveData(*e11.coefficients, conductor=11, rank_hint=0, label="11a1copy")
        period_map_for(e11)
        period_map_for(other)
        assert period_map_path(e11) != period_map_path(other)
        assert len(list(cache_dir.glob("phi_*"))) == 2

    def test_ap_tables_scoped_by_bound(self, e11, cache_dir):
        clear_memory_cache()
        ap_table(e11, 30)
        ap_table(e11, 50)
        assert ap_cache_path(e11, 30).exists()
        assert ap_cache_path(e11, 50).exists()
        assert ap_cache_path(e11, 30) != ap_cache_path(e11, 50)


class TestDamagedCaches:
    def test_truncated_period_map_rebuilt(self, e11, phi11, cache_dir):
        path = period_map_path(e11)
        text = dump_period_map(phi11)
        path.write_text("\n".join(text.splitlines()[:7]) + "\n")
        assert period_map_for(e11) == phi11
        assert path.read_text() == text

    def test_wrong_magic_rebuilt(self, e11, phi11, cache_dir):
        path = period_map_path(e11)
        path.write_text(dump_period_map(phi11).replace(PERIOD_MAP_MAGIC, "STICKEL-PHI v0"))
        assert period_map_for(e11) == phi11
        assert path.read_text().startswith(PERIOD_MAP_MAGIC)

    def test_foreign_period_map_ignored(self, e11, e37, phi37, cache_dir):
        # a 37a1 map sitting at 11a1's path
        period_map_path(e11).write_text(dump_period_map(phi37))
        assert period_map_for(e11).level == 11

    def test_corrupt_ap_table_rebuilt(self, e37, cache_dir):
        clear_memory_cache()
        path = ap_cache_path(e37, 40)
        path.write_text("STICKEL-AP v1\nnonsense\n")
        assert ap_table(e37, 40)[2] == -2
        clear_memory_cache()
        assert ap_table(e37, 40)[3] == -3
