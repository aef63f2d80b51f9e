import pytest

from tropical_moduli import build_chain_complex, enumerate_all, parse_weight_spec
from tropical_moduli.homology import betti_numbers

_strata_cache = {}
_complex_cache = {}
_profile_cache = {}


def get_weights(spec):
    return parse_weight_spec(spec)


def get_strata(g, wspec):
    """Session-wide cache: stratum enumeration is the expensive step."""
    key = (g, wspec)
    if key not in _strata_cache:
        _strata_cache[key] = enumerate_all(g, parse_weight_spec(wspec))
    return _strata_cache[key]


def get_complex(g, wspec, filter_name="all"):
    key = (g, wspec, filter_name)
    if key not in _complex_cache:
        _complex_cache[key] = build_chain_complex(
            g, parse_weight_spec(wspec), filter_name, strata=get_strata(g, wspec)
        )
    return _complex_cache[key]


def get_profile(g, wspec, filter_name="all"):
    key = (g, wspec, filter_name)
    if key not in _profile_cache:
        _profile_cache[key] = betti_numbers(get_complex(g, wspec, filter_name))
    return _profile_cache[key]


@pytest.fixture(scope="session")
def cached():
    class Cache:
        weights = staticmethod(get_weights)
        strata = staticmethod(get_strata)
        complex = staticmethod(get_complex)
        profile = staticmethod(get_profile)

    return Cache


def pytest_terminal_summary(terminalreporter):
    """Print one pass/fail line per acceptance criterion."""
    try:
        from test_acceptance import REPORT_LINES
    except ImportError:
        return
    if REPORT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in REPORT_LINES:
            terminalreporter.write_line(line)
