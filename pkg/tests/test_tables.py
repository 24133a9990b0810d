import pytest

from sieve.tables import (
    CATALOGUED_DISCREPANCIES,
    DISCREPANCY,
    MATCH,
    TABLES,
    UNCATALOGUED,
    UNCHECKED,
    TableRow,
    replicate_table,
    suzuki_discriminant,
    table_id,
    unitary_line_index,
)

# Tables whose every row reproduces, and the catalogue entries the others raise
CLEAN_TABLES = ("Pi", "C5", "O1", "O2")
EXPECTED_DISCREPANCIES = {
    "PSU-1.2": {"psu-q-typo"},
    "classical_not_novelty": {"cnn-omega-dimension"},
    "discriminant": {"delta-row-alignment"},
    "leftover": {"leftover-omega6-bound"},
}


@pytest.fixture(scope="module")
def reports():
    return {name: replicate_table(name) for name in TABLES}


def _row(report, label: str) -> TableRow:
    matches = [row for row in report.rows if row.label == label]
    assert len(matches) == 1, f"{report.table} has {len(matches)} rows labelled {label!r}"
    return matches[0]


########################################################## REGISTRY


@pytest.mark.parametrize(
    "name, tid",
    [
        ("Pi", "Pi"),
        ("tbl:Pi", "Pi"),
        (" TBL:C5 ", "C5"),
        ("psu1.2", "PSU-1.2"),
        ("tbl:psu1.2", "PSU-1.2"),
        ("delta", "discriminant"),
        ("leftover2", "leftover"),
        ("Classical_Not_Novelty", "classical_not_novelty"),
    ],
)
def test_table_aliases(name, tid):
    assert table_id(name) == tid


def test_unknown_table():
    with pytest.raises(ValueError):
        table_id("tbl:nope")
    with pytest.raises(ValueError):
        replicate_table("O3")


@pytest.mark.parametrize("name, count", [("Pi", 11), ("C5", 8), ("PSU-1.2", 4), ("O1", 9), ("O2", 3), ("leftover", 15)])
def test_row_counts(reports, name, count):
    assert len(reports[name].rows) == count


########################################################## DISCREPANCIES


@pytest.mark.parametrize("name", CLEAN_TABLES)
def test_clean_tables_reproduce(reports, name):
    report = reports[name]
    assert report.discrepancies == []
    assert all(row.status == MATCH for row in report.rows)
    assert report.to_dict()["discrepancies"] == 0


@pytest.mark.parametrize("name", sorted(EXPECTED_DISCREPANCIES))
def test_discrepancies_are_catalogued(reports, name):
    report = reports[name]
    assert report.uncatalogued == []
    assert {row.discrepancy for row in report.discrepancies} == EXPECTED_DISCREPANCIES[name]
    assert all(row.status == DISCREPANCY for row in report.discrepancies)
    assert set(EXPECTED_DISCREPANCIES[name]) <= set(CATALOGUED_DISCREPANCIES)


def test_every_check_is_recorded(reports):
    for report in reports.values():
        for row in report.rows:
            if row.recomputed:
                assert row.checks, f"{report.table} row {row.label} has no checks"
            for check in row.checks:
                assert isinstance(check.outcome, bool)


def test_uncatalogued_mismatch():
    row = TableRow("made up", {"P": 10, "bound": None}, {"P": 11, "bound": True})
    assert row.mismatched == ["P"]
    assert row.status == DISCREPANCY
    assert row.discrepancy == UNCATALOGUED
    assert TableRow("blank", {"P": None}, {"P": 3}).status == MATCH


########################################################## ROWS


def test_linear_rows(reports):
    row = _row(reports["Pi"], "(4,4) (2,4)")
    assert row.recomputed["P"] == 357
    assert row.recomputed["bound"] is False

    row = _row(reports["Pi"], "(5,2) (3,2)")
    assert row.recomputed == {"P": 155, "bound": True, "integral": False, "delta": 4376}

    row = _row(reports["Pi"], "(4,8) (2,8)")
    assert row.recomputed["P"] == 4745 and row.recomputed["integral"] is False

    row = _row(reports["C5"], "(2,16) (2,4)")
    assert row.recomputed["P"] == 68 and row.recomputed["bound"] is True


def test_unitary_rows(reports):
    assert unitary_line_index(4) == 1105
    assert _row(reports["PSU-1.2"], "q=4").recomputed["P"] == 1105

    typo = _row(reports["PSU-1.2"], "q=1")
    assert typo.mismatched == ["q"]
    assert typo.recomputed["q"] == 11
    assert typo.recomputed["t"] == 1231
    assert typo.recomputed["t_le_s2"] is False


def test_discriminant_rows(reports):
    report = reports["discriminant"]
    assert _row(report, "PSL2(19) / A5 t+1=5").recomputed["delta"] == [921]
    sixes = _row(report, "PSL2(19) / A5 t+1=6")
    assert sixes.recomputed["delta"] == [1156]
    assert sixes.recomputed["square"] == [True] and sixes.recomputed["s"] == [None]
    assert _row(report, "PSU3(5) / M10 t+1=10").recomputed["delta"] == [6364]

    shifted = _row(report, "Omega7(3) / Sp6(2) t+1=28,36")
    assert shifted.recomputed["N"] == 3159
    assert shifted.recomputed["delta"] == [341848, 443416]
    assert shifted.discrepancy == "delta-row-alignment"
    assert _row(report, "PSU3(5) / A7 t+1=7").recomputed["delta"] == [1225]


@pytest.mark.parametrize("q", [8, 32])
def test_suzuki_discriminant(reports, q):
    row = _row(reports["discriminant"], f"PSp4({q}) / Sz({q}) t+1={q * q + 1}")
    assert row.recomputed["delta"] == [suzuki_discriminant(q)]
    assert row.recomputed["square"] == [False]
    assert row.status == MATCH


def test_leftover_rows(reports):
    report = reports["leftover"]
    sp4 = _row(report, "Sp4(2) / 5:4")
    assert sp4.recomputed["delta"] == 585 and sp4.recomputed["s"] is None
    omega3 = _row(report, "Omega3(11) / A4")
    assert omega3.recomputed["delta"] == 664
    assert _row(report, "Omega3(19) / A4").recomputed["bound"] is False

    unbounded = _row(report, "Sp4(2^f) / [2^4f]:C^2")
    assert unbounded.status == UNCHECKED and unbounded.unchecked == ["bound"]
    assert unbounded.discrepancy is None
    assert unbounded.recomputed["index"] == [425, 5265, 74273, 1116225]
    assert all(check.test == "index" and check.outcome for check in unbounded.checks)
    assert unbounded.to_dict()["unchecked"] == ["bound"]
    assert report.unchecked == [unbounded]
    assert report.to_dict()["unchecked"] == 1

    omega6 = _row(report, "Omega+6(q) / GL3(q)/(q-1,2)")
    assert omega6.recomputed["bound"] is True
    assert omega6.discrepancy == "leftover-omega6-bound"


def test_classical_not_novelty_rows(reports):
    report = reports["classical_not_novelty"]
    row = _row(report, "POmega7(3) / PSp6(2)")
    assert row.recomputed["N"] == 3159 and row.recomputed["bound"] is True
    assert _row(report, "PSL2(19) / A5").recomputed["N"] == 57

    renamed = _row(report, "POmega-12(2) / A13")
    assert renamed.mismatched == ["T"]
    assert renamed.recomputed["T"] == "POmega-12(2)"


def test_orthogonal_rows(reports):
    for name in ("O1", "O2"):
        for row in reports[name].rows:
            assert row.recomputed["contradiction"] is True
            assert len(row.checks) == len(row.recomputed["samples"])


def test_report_to_dict(reports):
    document = reports["PSU-1.2"].to_dict()
    assert document["table"] == "PSU-1.2"
    assert document["columns"] == ["q", "P", "integral", "t_le_s2"]
    assert document["discrepancies"] == 1
    assert [row["status"] for row in document["rows"]] == [MATCH, MATCH, MATCH, DISCREPANCY]
