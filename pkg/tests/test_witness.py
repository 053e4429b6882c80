import json

import pytest

import qmu
from qmu.constructions import (
    WitnessCertificate,
    witness_q3_phi,
    witness_q3_psi,
    witness_lift_chain,
    witness_interval_part,
)
from qmu.graphs import hypercube, bipartition


def test_builtin_witnesses_check_out():
    for cert in (witness_q3_phi(), witness_q3_psi(), witness_lift_chain(2),
                 witness_interval_part(3, 12), witness_interval_part(4, 20)):
        ok, detail = cert.check()
        assert ok, detail


def test_lift_chain_palettes():
    for times, (n, t) in enumerate([(3, 4), (4, 5), (5, 6), (6, 7)]):
        cert = witness_lift_chain(times)
        assert cert.graph == hypercube(n)
        assert cert.coloring.t == t
        assert cert.claim == {"kind": "mu11_zero", "t": t}
        ok, _ = cert.check()
        assert ok
    with pytest.raises(ValueError):
        witness_lift_chain(-1)


def test_json_roundtrip_is_bit_exact():
    cert = witness_q3_psi()
    text = cert.to_json()
    again = WitnessCertificate.from_json(text)
    assert again == cert
    assert again.to_json() == text
    ok, _ = again.check()
    assert ok


def test_corrupted_coloring_fails():
    cert = witness_q3_psi()
    obj = cert.to_json_obj()
    obj["coloring"]["colors"][0] = obj["coloring"]["colors"][1]  # duplicate color
    ok, detail = WitnessCertificate.from_json(json.dumps(obj)).check()
    assert not ok
    assert "invalid" in detail


def test_wrong_claim_value_fails():
    cert = witness_q3_psi()
    wrong = WitnessCertificate(cert.graph, cert.coloring, {"kind": "f_equals", "value": 6})
    ok, detail = wrong.check()
    assert not ok and "f=5" in detail


def test_all_claim_kinds():
    g = hypercube(3)
    psi = qmu.q3_psi()
    b = bipartition(g)
    cases = [
        ({"kind": "f_equals", "value": 5}, True),
        ({"kind": "f_equals", "value": 0}, False),
        ({"kind": "interval_on", "vertices": sorted(b.part_r)}, False),  # psi is not
        ({"kind": "interval_on", "vertices": [4, 6]}, True),
        ({"kind": "harmonic"}, True),
        ({"kind": "mu2_lower_bound", "t": 12, "value": 5}, True),
        ({"kind": "mu2_lower_bound", "t": 12, "value": 6}, False),
        ({"kind": "mu2_lower_bound", "t": 11, "value": 5}, False),  # palette mismatch
        ({"kind": "mu11_zero", "t": 12}, False),
        ({"kind": "nonsense"}, False),
    ]
    for claim, want in cases:
        ok, detail = WitnessCertificate(g, psi, claim).check()
        assert ok is want, (claim, detail)


def test_mu11_zero_claim_on_phi():
    g = hypercube(3)
    ok, _ = WitnessCertificate(g, qmu.q3_phi(), {"kind": "mu11_zero", "t": 4}).check()
    assert ok


def test_exact_search_witness_as_certificate(warm):
    g = hypercube(3)
    r = qmu.mu_exact(g, 12, "max")
    cert = WitnessCertificate(g, r.witness, {"kind": "mu2_lower_bound", "t": 12, "value": r.value})
    ok, detail = cert.check()
    assert ok, detail
