"""Tests for API stability labels."""

import warnings

from clawfree.decompose import decompose, property2
from clawfree.graph import complement, empty
from clawfree.stability import (
    Stability,
    beta,
    get_stability,
    is_stable,
    labeled_api,
    stable,
)


def test_labels_on_public_api():
    assert is_stable(complement)
    assert is_stable(property2)
    assert get_stability(decompose) == "beta"
    assert get_stability(len) == "unknown"


def test_label_attributes():
    @stable(since="0.2.0")
    def f(x):
        return x + 1

    @beta
    def g():
        return "g"

    assert f(1) == 2 and f.__name__ == "f"
    assert f._stability_since == "0.2.0"
    assert g() == "g" and get_stability(g) == Stability.BETA
    assert beta(note="x")(f)._stability_note == "x"


def test_stable_call_does_not_warn():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert complement(empty(3)).edge_count == 3


def test_labeled_api_inventory():
    api = labeled_api()
    assert api["clawfree.structure.classify"] == "stable"
    assert api["clawfree.harness.run_suite"] == "beta"
    assert api["clawfree.incidence.wilson_kernel_members"] == "beta"
    assert "clawfree.graph.complement" in api
    # helpers and re-imported names are not listed
    assert "clawfree.decompose.complement" not in api
    assert set(api.values()) == {"stable", "beta"}
