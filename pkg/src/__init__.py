"""
Stickel - verification engine for Mazur-Tate Stickelberger elements.

Builds modular symbols of elliptic curves over Q from first principles,
assembles Stickelberger elements in integral group rings and checks the
relations and vanishing bounds they satisfy.

Import from submodules directly:
    from src.curve import CurveData, reduce_mod_p
    from src.maninsym import build_space, cut_eigenspace
    from src.groupring import galois_group, augmentation_order
    from src.stickelberger import theta, check_vanishing_bound
    from src.lseries import l_value_twisted
"""


def _get_version():
    """Read version from VERSION file."""
    from pathlib import Path
    from .core.paths import get_app_dir
    for base in [Path(__file__).parent.parent, get_app_dir()]:
        version_file = base / "VERSION"
        if version_file.exists():
            return version_file.read_text().strip()
    return "0.0.0"


__version__ = _get_version()
