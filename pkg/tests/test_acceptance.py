"""Acceptance gate: every criterion of the built-in verification suite, run
at the full sample counts with its stated runtime limit, one test per
criterion.  ``liegeo verify-paper --level full`` runs the same suite."""

import pytest

from liegeo.verification import CRITERIA, DEFAULT_SEED, run_suite

_RESULTS = None


def _results():
    global _RESULTS
    if _RESULTS is None:
        _RESULTS = {r.cid: r for r in run_suite(level="full", seed=DEFAULT_SEED)}
    return _RESULTS


@pytest.mark.parametrize("cid,title", [(c[0], c[1]) for c in CRITERIA])
def test_criterion(cid, title, capsys):
    result = _results()[cid]
    with capsys.disabled():
        print("\n" + result.line())
        for d in result.details:
            print("       " + d)
    assert result.passed, "%s -- %s" % (result.line(), result.error)
