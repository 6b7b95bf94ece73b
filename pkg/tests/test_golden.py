"""The fixture files record the tables as published; the engine must match
them exactly except where the versioned typo ledger says otherwise."""

from rootmean import golden
from rootmean.relations import RelationVector, check_inheritance
from rootmean.sympoly import SymPoly


def test_phi_tables_reproduce():
    report = golden.check_phi_tables()
    assert report.compared_rows == 60
    assert report.clean, [d.describe() for d in report.unexplained]
    # exactly the two ledgered coefficient typos
    assert len(report.discrepancies) == 2
    assert all(d.known for d in report.discrepancies)


def test_gw_tables_reproduce():
    report = golden.check_gw_tables()
    assert report.clean, [d.describe() for d in report.unexplained]
    known = [d for d in report.discrepancies if d.known]
    assert len(known) == 5  # one in the family-size collation, four cells in the degree collation


def test_full_report_counts():
    report = golden.full_report()
    assert report.compared_rows == 126
    assert report.matches == 119
    assert report.clean


def test_catalog_relations_all_annihilate():
    entries = golden.catalog_relations()
    assert len(entries) > 100
    for entry in entries:
        rel = RelationVector.make(entry["D"], entry["delta"], entry["alpha"].items())
        assert rel.verify()


def test_catalog_covers_all_value_orders():
    deltas = {(e["D"], e["delta"]) for e in golden.catalog_relations()}
    for key in ((3, 1), (4, 2), (5, 3), (6, 4), (3, -2), (3, -1)):
        assert key in deltas


def test_inheritance_chains_verify():
    chains = golden.inheritance_chains()
    assert set(chains) == set("abcdefghi")
    for label, chain in chains.items():
        for idx, entry in enumerate(chain):
            rel = RelationVector.make(entry["D"], entry["delta"], entry["alpha"].items())
            assert rel.verify()
            if idx + 1 < len(chain):
                nxt = chain[idx + 1]
                assert nxt["D"] == entry["D"] + 1
                assert nxt["delta"] == entry["delta"] + 1
                assert nxt["alpha"] == {r + 1: a for r, a in entry["alpha"].items()}
                assert check_inheritance(rel)


def test_fixture_terms_parse_as_polynomials():
    data = golden.load_fixture("phi_tables.json")["phi_tables"]
    row = data["4"]["rows"][2]  # rho = 1
    poly = SymPoly.from_json({"terms": row["terms"]})
    assert str(poly) == "-9 r1^4 + 18 r1^2 r2 - 4 r1 r3 - 6 r2^2 + 1 r4"


def test_typo_ledger_entries_have_evidence():
    typos = golden.load_fixture("known_typos.json")["typos"]
    assert len(typos) >= 10
    for t in typos:
        assert t["evidence"]
        assert t["table"]
