"""CLI: exit-code contract, fixture comparison, file ingestion, determinism."""
import io
import json

from glattice.cli import (
    EXIT_CAP_EXCEEDED,
    EXIT_MISSING_DATA,
    EXIT_OK,
    main,
)
from glattice.intmat import IntMatrix
from glattice.rootsys import RootSystemSpec, build
from glattice.serialize import group_to_json, matrix_to_json


def run(argv):
    buf = io.StringIO()
    rc = main(argv, out=buf)
    return rc, buf.getvalue()


def test_rootsys_table_ok_and_filtered():
    rc, out = run(["rootsys-table", "--max-rank", "2"])
    assert rc == EXIT_OK
    names = [line.split()[0] for line in out.strip().splitlines()[1:]]
    assert set(names) == {"A1", "A2", "B2", "G2"}


def test_rootsys_table_rank8_matches_fixture():
    rc, out = run(["rootsys-table", "--max-rank", "8"])
    assert rc == EXIT_OK


def test_rootsys_table_csv_stable_columns():
    rc, out = run(["--format", "csv", "rootsys-table", "--max-rank", "2"])
    assert rc == EXIT_OK
    assert out.splitlines()[0] == "root_system,lattice,symrank,generator"


def test_rdim_table_values():
    rc, out = run(["--format", "json", "rdim-table", "--max-n", "10"])
    assert rc == EXIT_OK
    rows = json.loads(out)
    assert [r["rdim_lower_bound"] for r in rows] == [2, 6, 12, 24, 40, 72, 128, 256, 512, 1024]
    assert rows[0]["rdim_lower_bound"] == 2


def test_rdim_table_tail_powers_of_two():
    rc, out = run(["--format", "json", "rdim-table", "--max-n", "10"])
    rows = json.loads(out)
    assert [r["rdim_lower_bound"] for r in rows[-3:]] == [256, 512, 1024]


def test_verify_three_sublattice_table():
    rc, out = run(["verify", "--name", "prop515"])
    assert rc == EXIT_OK
    assert "14" in out and "84" in out and "128" in out


def test_verify_pinned_thresholds():
    rc, out = run(["verify", "--name", "thmA2"])
    assert rc == EXIT_OK


def test_verify_almost_simple():
    rc, out = run(["verify", "--name", "almost-simple", "--qcap", "32", "--ncap", "8"])
    assert rc == EXIT_OK
    assert "M23,M24,Co2,Co3,HS,McL" in out.replace(" ", "")


def test_verify_low_dims_reports_missing_data():
    rc, out = run(["verify", "--name", "low-dims"])
    assert rc == EXIT_MISSING_DATA
    assert "partial" in out


def test_gf2_commands():
    rc, out = run(["gf2", "factor-xp1", "--p", "7"])
    assert rc == EXIT_OK
    assert "1101" in out and "1011" in out
    rc, out = run(["gf2", "subspaces", "--p", "7"])
    assert rc == EXIT_OK
    assert "{0,1,2}" in out


def test_monomial_classify():
    rc, out = run(["monomial", "classify", "--p", "7"])
    assert rc == EXIT_OK
    assert "128" in out


def test_bounds_prime_and_prime_of_form():
    rc, out = run(["bounds", "prime", "--a", "2", "--case", "II.i", "--horizon", "500"])
    assert rc == EXIT_OK and "31" in out
    rc, out = run(["--format", "json", "bounds", "prime-of-form", "--qmax", "100", "--mmax", "12"])
    assert rc == EXIT_OK
    rows = json.loads(out)
    assert {"p": 2801, "q": 7, "m": 5} in rows


def test_symrank_command_with_ingested_group(tmp_path):
    g2 = build(RootSystemSpec("G", 2))
    gpath = tmp_path / "g2.json"
    gpath.write_text(json.dumps(group_to_json(2, list(g2.matgroup().generators), label="w(g2)")))
    rc, out = run(["symrank", "--group", str(gpath), "--radius", "3"])
    assert rc == EXIT_OK
    payload = json.loads(out)
    assert payload["upper_bound"] == 6
    assert payload["exactness"] == "exact_within_bound"
    rc, out = run(["symrank", "--group", str(gpath), "--mode", "orbit:2,-1"])
    assert json.loads(out) == {"generates": True, "orbit_size": 6, "vector": [2, -1]}


def test_symrank_diagonal_theta_mode(tmp_path):
    gram = IntMatrix.from_rows([(2, -1), (-1, 2)])
    a2 = build(RootSystemSpec("A", 2))
    from glattice.matgroup import action_in_row_basis

    g = action_in_row_basis(a2.matgroup(), a2.cartan)
    gpath = tmp_path / "a2root.json"
    gpath.write_text(json.dumps(group_to_json(2, list(g.generators), gram=gram)))
    rc, out = run(["symrank", "--group", str(gpath), "--mode", "diagonal-theta"])
    assert rc == EXIT_OK
    payload = json.loads(out)
    assert payload == {"upper_bound": 6, "exactness": "upper_only", "diagonal_norms": [2]}


def test_symrank_diagonal_theta_without_gram_is_missing_data(tmp_path):
    gpath = tmp_path / "nogram.json"
    gpath.write_text(json.dumps(group_to_json(1, [IntMatrix.from_rows([(-1,)])])))
    rc, _ = run(["symrank", "--group", str(gpath), "--mode", "diagonal-theta"])
    assert rc == EXIT_MISSING_DATA


def test_theta_command(tmp_path):
    mpath = tmp_path / "a2.json"
    mpath.write_text(json.dumps(matrix_to_json(IntMatrix.from_rows([(2, -1), (-1, 2)]))))
    rc, out = run(["--format", "json", "theta", "--gram", str(mpath), "--horizon", "2"])
    assert rc == EXIT_OK
    rows = json.loads(out)
    assert [r["count"] for r in rows] == [1, 0, 6]
    rc, out = run(["theta", "--gram", str(mpath), "--diagonal-bound"])
    assert rc == EXIT_OK and "6" in out


def test_cap_exceeded_exit_code(tmp_path):
    gpath = tmp_path / "order2.json"
    gpath.write_text(json.dumps(group_to_json(2, [IntMatrix.from_rows([(0, 1), (1, 0)])])))
    rc, _ = run(["--cap", "1", "symrank", "--group", str(gpath), "--radius", "2"])
    assert rc == EXIT_CAP_EXCEEDED


def test_byte_stable_output():
    outs = {run(["rootsys-table", "--max-rank", "8"])[1] for _ in range(3)}
    assert len(outs) == 1
    outs = {run(["verify", "--name", "prop515"])[1] for _ in range(2)}
    assert len(outs) == 1


def test_synthetic_generator_file_ingestion(tmp_path):
    """External generator sets enter through the documented group schema."""
    # a synthetic stand-in for an exported maximal-group generator file
    obj = {
        "dim": 2,
        "generators": [
            {"rows": 2, "cols": 2, "entries": ["0", "-1", "1", "0"]},
            {"rows": 2, "cols": 2, "entries": ["0", "1", "1", "0"]},
        ],
        "gram": {"rows": 2, "cols": 2, "entries": ["1", "0", "0", "1"]},
        "label": "synthetic (2,q,z) export",
    }
    gpath = tmp_path / "synthetic.json"
    gpath.write_text(json.dumps(obj))
    rc, out = run(["symrank", "--group", str(gpath), "--radius", "2"])
    assert rc == EXIT_OK
    assert json.loads(out)["upper_bound"] == 4  # orbit of e_1 under D_4-symmetry
    rc, out = run(["symrank", "--group", str(gpath), "--mode", "diagonal-theta"])
    assert rc == EXIT_OK
    assert json.loads(out)["upper_bound"] == 4
