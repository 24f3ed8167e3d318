# Local application imports
from apps.common.utils.conf import get_setting
from apps.common.utils.differences import finite_difference_jacobian
from apps.common.utils.files import read_json, write_atomic, write_csv, write_json
from apps.common.utils.hashing import config_hash, package_versions
from apps.common.utils.parsing import parse_float_list
from apps.common.utils.random import derive_seed, make_generator

# Exports
__all__ = [
    "config_hash",
    "derive_seed",
    "finite_difference_jacobian",
    "get_setting",
    "make_generator",
    "package_versions",
    "parse_float_list",
    "read_json",
    "write_atomic",
    "write_csv",
    "write_json",
]
