import doctest

from macq import algebra, symfunc


def test_module_doctests():
    for mod in (algebra, symfunc):
        failures, _ = doctest.testmod(mod)
        assert failures == 0
