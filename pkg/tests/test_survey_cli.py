"""The survey layer, structure battery, and the command-line interface.

CLI tests run the installed console script in a subprocess so argument
parsing, exit codes, and stream handling are exercised end to end.
"""

import json
import subprocess
import sys

import pytest

from levibridge.canon import canonical_form
from levibridge.construction import bridge_census, bridge_graph, goedgebeur_graph
from levibridge.groups import PermGroup, dihedral, groups_isomorphic
from levibridge.graphs import build, graph6_encode, heawood, k33, petersen
from levibridge.survey import (
    StructureError,
    aut_structure,
    klein_coset_partition,
    refutation_check,
    run_survey,
    survey_json,
)
from levibridge.twofactors import ALL_ODD, MIXED


class TestSurvey:
    def test_rows_mirror_census(self):
        rows = run_survey()
        census = bridge_census()
        assert len(rows) == 17
        assert [r.size for r in rows] == [len(c.specs) for c in census]
        assert [r.aut_order for r in rows] == [c.aut_order for c in census]
        assert rows[0].aut_order == 144
        assert sum(r.size for r in rows) == 576

    def test_diagonal_flags(self):
        rows = run_survey()
        assert [r.aut_order for r in rows if r.diagonal] == [144, 24]

    def test_representative_is_class_certificate(self):
        rows = run_survey()
        for row, cls in zip(rows, bridge_census()):
            assert row.representative == cls.certificate.decode("ascii")
        assert rows[0].representative == canonical_form(
            goedgebeur_graph()
        ).certificate.decode("ascii")

    def test_json_is_deterministic(self):
        rows = run_survey()
        assert survey_json(rows) == survey_json(run_survey())
        payload = json.loads(survey_json(rows))
        assert payload["schema"] == 1
        assert len(payload["rows"]) == 17
        assert "p2fi_status" not in payload["rows"][0]

    def test_p2fi_sweep_singles_out_the_identified_class(self):
        rows = run_survey(p2fi=True)
        assert rows[0].p2fi_status == ALL_ODD
        others = {r.p2fi_status for r in rows[1:]}
        assert others == {MIXED}
        payload = json.loads(survey_json(rows))
        assert payload["rows"][0]["p2fi_status"] == ALL_ODD


class TestKleinCosetPartition:
    def test_six_rows_of_four_partition_s4(self):
        rows = klein_coset_partition()
        assert len(rows) == 6
        flat = [p for row in rows for p in row]
        assert len(set(flat)) == 24

    def test_first_row_is_a_klein_four_group(self):
        # The partition is anchored at the Klein group generated by the
        # two transpositions (0 2) and (1 3), not the normal Klein
        # subgroup of S4.
        rows = klein_coset_partition()
        assert set(rows[0]) == {
            (0, 1, 2, 3), (2, 1, 0, 3), (0, 3, 2, 1), (2, 3, 0, 1)
        }
        four = PermGroup.from_elements(4, rows[0])
        assert four.order == 4
        from levibridge.groups import order_profile

        assert order_profile(four) == {1: 1, 2: 3}

    def test_first_two_rows_form_a_dihedral_group(self):
        rows = klein_coset_partition()
        eight = PermGroup.from_elements(4, rows[0] + rows[1])
        assert eight.order == 8
        assert groups_isomorphic(eight, dihedral(4))

    def test_first_two_rows_are_the_diagonal_alphas(self):
        # The eight alpha values whose diagonal join lands in the
        # 144-automorphism class are exactly rows one and two.
        rows = klein_coset_partition()
        census = bridge_census()
        class_144 = next(c for c in census if c.aut_order == 144)
        diagonal_alphas = {
            s.alpha for s in class_144.specs if s.alpha == s.beta
        }
        assert diagonal_alphas == set(rows[0] + rows[1])

    def test_rows_are_genuine_cosets(self):
        from levibridge.groups import compose

        rows = klein_coset_partition()
        klein = rows[0]
        for row in rows:
            rep = row[0]
            assert set(row) == {compose(v, rep) for v in klein}


class TestAutStructure:
    def test_full_battery(self):
        report = aut_structure()
        assert report["all_ok"]
        assert report["aut_order"] == 144
        assert report["k_order"] == 9
        assert report["k_profile"] == {1: 1, 3: 8}
        assert report["k_abelian"] and report["k_iso_z3xz3"]
        assert report["k_normal"] and report["k_regular_on_marked"]
        assert report["h_order"] == 16
        assert not report["h_abelian"]
        assert report["h_profile"] == {1: 1, 2: 11, 4: 4}
        assert report["h_iso_d4xz2"]
        assert report["semidirect"]
        assert report["sigma_two_m"] and report["sigma_two_f"]
        assert report["rho"] and report["delta"]
        assert report["tau_count"] == 1
        assert report["stabilizer_orders"] == [16] * 9
        assert report["stabilizers_conjugate"]

    def test_marked_edges_transport_to_relabeled_copies(self):
        g = goedgebeur_graph()
        relabeled = build(g.n, [(29 - u, 29 - v) for u, v in g.edges])
        report = aut_structure(relabeled)
        assert report["all_ok"]

    def test_rejects_foreign_graph(self):
        with pytest.raises(StructureError):
            aut_structure(heawood())


class TestRefutation:
    def test_report(self):
        report = refutation_check()
        assert report["refutation_holds"]
        assert report["vertices"] == 30 and report["edges"] == 45
        assert report["girth"] == 6
        assert report["cyclic_edge_connectivity"] == 6
        assert report["essentially_4_edge_connected"]
        assert report["matching_count"] == 312
        assert report["p2fi_status"] == ALL_ODD
        assert report["distinct_from"] == {
            "k33": True, "heawood": True, "pappus": True
        }


def _cli(*args, stdin: str | None = None):
    return subprocess.run(
        [sys.executable, "-m", "levibridge.cli", *args],
        capture_output=True,
        text=True,
        input=stdin,
        timeout=300,
    )


class TestCli:
    def test_gen_goedgebeur(self):
        out = _cli("gen", "goedgebeur")
        assert out.returncode == 0
        assert out.stdout.strip().encode("ascii") \
            == graph6_encode(goedgebeur_graph())

    def test_gen_labels(self):
        out = _cli("gen", "goedgebeur", "--labels")
        assert out.returncode == 0
        lines = out.stdout.splitlines()
        labels = json.loads(lines[1])
        assert labels[:2] == ["fp0", "fp1"] and labels[-1] == "ml7"

    def test_gen_bridge_and_gp(self):
        out = _cli("gen", "bridge", "0123", "0123")
        assert out.returncode == 0
        assert out.stdout.strip() == _cli("gen", "goedgebeur").stdout.strip()
        out = _cli("gen", "gp", "5", "2")
        assert out.returncode == 0
        assert out.stdout.strip().encode() == graph6_encode(petersen())

    def test_gen_bridge_bad_perm_exits_1(self):
        out = _cli("gen", "bridge", "0124", "0123")
        assert out.returncode == 1

    def test_props_pipeline(self):
        gen = _cli("gen", "goedgebeur")
        out = _cli("props", stdin=gen.stdout)
        assert out.returncode == 0
        report = json.loads(out.stdout)
        assert report["vertices"] == 30
        assert report["cubic"] and report["bipartite"]
        assert report["girth"] == 6
        assert report["cyclic_edge_connectivity"] == 6
        assert report["essentially_4_edge_connected"]
        assert report["aut_order"] == 144

    def test_p2fi_pipeline(self):
        out = _cli("p2fi", stdin=_cli("gen", "k33").stdout)
        assert out.returncode == 0
        report = json.loads(out.stdout)
        assert report == {
            "matching_count": 6,
            "cycle_counts": [1, 1, 1, 1, 1, 1],
            "status": "AllOdd",
        }

    def test_aut_default_and_structure(self):
        out = _cli("aut")
        assert out.returncode == 0
        assert json.loads(out.stdout)["aut_order"] == 144
        out = _cli("aut", "--structure")
        assert out.returncode == 0
        report = json.loads(out.stdout)
        assert report["all_ok"] and report["tau_count"] == 1

    def test_iso_exit_codes(self, tmp_path):
        a = tmp_path / "a.g6"
        b = tmp_path / "b.g6"
        c = tmp_path / "c.g6"
        a.write_text(graph6_encode(petersen()).decode() + "\n")
        shuffled = build(10, [(9 - u, 9 - v) for u, v in petersen().edges])
        b.write_text(graph6_encode(shuffled).decode() + "\n")
        c.write_text(graph6_encode(k33()).decode() + "\n")
        same = _cli("iso", str(a), str(b))
        assert same.returncode == 0
        mapping = json.loads(same.stdout)["mapping"]
        assert sorted(mapping) == list(range(10))
        assert _cli("iso", str(a), str(c)).returncode == 2

    def test_config_commands(self):
        out = _cli("config", "fano")
        assert out.returncode == 0
        assert json.loads(out.stdout)["lines"][0] == [0, 1, 2]
        out = _cli("config", "mk", "--self-dual")
        assert json.loads(out.stdout) == {"self_dual": True}
        out = _cli("config", "goedgebeur", "--levi")
        assert out.returncode == 0
        assert out.stdout.strip().encode() == graph6_encode(goedgebeur_graph())

    def test_survey_json_file(self, tmp_path):
        path = tmp_path / "survey.json"
        out = _cli("survey", "--json", str(path))
        assert out.returncode == 0
        payload = json.loads(path.read_text())
        assert len(payload["rows"]) == 17
        assert payload["rows"][0]["aut_order"] == 144

    def test_refute(self):
        out = _cli("refute")
        assert out.returncode == 0
        assert json.loads(out.stdout)["refutation_holds"]

    def test_usage_errors_exit_1(self):
        assert _cli("gen", "nosuch").returncode == 1
        assert _cli().returncode == 1
        out = _cli("props", stdin="not-a-graph6-line\n")
        assert out.returncode == 1

    def test_structural_error_exits_2(self):
        # p2fi on a non-cubic graph is a structural failure, not usage.
        from levibridge.graphs import cycle

        out = _cli("p2fi", stdin=graph6_encode(cycle(6)).decode() + "\n")
        assert out.returncode == 2
