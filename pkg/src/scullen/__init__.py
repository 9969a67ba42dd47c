"""s-Cullen numbers n*s^n + 1 that are also repunits (11...1)_b."""

from .arithmetic import factor, iroot, ipow, is_probable_prime, power_compare, radical
from .cullen import CullenIndex, cullen_range, cullen_value
from .families import FamilyTag, classify, family_a_members, family_b_members
from .repunit import RepunitForm, detect_repunits, is_repunit, repunit_value
from .search import SearchConfig, run_search

__version__ = "0.1.0"

__all__ = [
    "CullenIndex",
    "FamilyTag",
    "RepunitForm",
    "SearchConfig",
    "classify",
    "cullen_range",
    "cullen_value",
    "detect_repunits",
    "factor",
    "family_a_members",
    "family_b_members",
    "ipow",
    "iroot",
    "is_probable_prime",
    "is_repunit",
    "power_compare",
    "radical",
    "repunit_value",
    "run_search",
]
