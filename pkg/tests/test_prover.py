import json

import networkx as nx
import pytest

from dstepsat import prover
from dstepsat.bounds import BoundsTable, known_table
from dstepsat.chirotope import Chirotope, verify_axioms
from dstepsat.encoder import CnfFormula, encode_gp_axioms
from dstepsat.errors import ModelError
from dstepsat.pathcomplex import PivotSequence, enumerate_with_revisits, expand_to_facets
from dstepsat.prover import (
    CaseReport,
    build_instance_formula,
    decode_model,
    default_revisits,
    prove_formula,
    prove_instance,
    reduction_check,
    run_case,
    verify_counterexample,
)
from dstepsat.solver import SAT, UNSAT

GEODESIC = "(1,3) (2,4) (3,5)"
LONG_WAY_ROUND = "(1,3) (2,4) (3,5) (4,6)"


def hexagon_path(line):
    return expand_to_facets(PivotSequence.from_line(line, 2), 6)


class TestDecodeModel:
    def test_signs_follow_literals(self):
        assert decode_model([1, -2, 3], 3, 2) == Chirotope(3, 2, (1, -1, 1))

    def test_zero_terminator_ignored(self):
        assert decode_model([-1, -2, -3, 0], 3, 2).signs == (-1, -1, -1)

    def test_partial_assignment(self):
        with pytest.raises(ModelError):
            decode_model([1, 2], 3, 2)

    def test_out_of_range(self):
        with pytest.raises(ModelError):
            decode_model([1, 2, 3, 4], 3, 2)


class TestVerifyCounterexample:
    def test_hexagon_carries_its_hull_path(self, hexagon):
        assert verify_counterexample(hexagon, hexagon_path(GEODESIC)) == []

    def test_shortcut_is_reported(self, hexagon):
        problems = verify_counterexample(hexagon, hexagon_path(LONG_WAY_ROUND))
        assert problems == ["end facets at distance 2 < 4"]

    def test_disconnected_end_facets_are_reported(self, hexagon, monkeypatch):
        monkeypatch.setattr(prover, "facet_graph", lambda facets: nx.empty_graph(facets))
        problems = verify_counterexample(hexagon, hexagon_path(GEODESIC))
        assert problems == ["end facets lie in different components of the facet graph"]


class TestProveInstance:
    def test_axioms_alone_are_satisfiable(self, run_config):
        formula = CnfFormula(6, 3)
        formula.extend("gp_axioms", encode_gp_axioms(6, 3))
        verdict = prove_formula(formula, config=run_config)
        assert verdict.status == SAT
        assert verify_axioms(decode_model(verdict.model, 6, 3))[0]

    def test_lazy_refutes_the_long_way_round(self, run_config):
        verdict = prove_instance(hexagon_path(LONG_WAY_ROUND), 6, mode="lazy", config=run_config)
        assert verdict.status == UNSAT
        assert verdict.added_cuts >= 1
        assert verdict.rounds == verdict.added_cuts + 1
        assert verdict.fragments["shortcuts"] == 2 * verdict.added_cuts

    def test_eager_refutes_the_long_way_round(self, run_config):
        pc = hexagon_path(LONG_WAY_ROUND)
        formula, shortcut_lines = build_instance_formula(pc, 6, "eager", dedupe=False)
        assert "{1,2} {1,6} {5,6}" in shortcut_lines
        assert formula.fragments["shortcuts"] == 2 * len(shortcut_lines)
        run_config.mode = "eager"
        verdict = prove_instance(pc, 6, mode="eager", config=run_config)
        assert verdict.status == UNSAT
        assert verdict.added_cuts == 0

    @pytest.mark.parametrize("mode", ["lazy", "eager"])
    def test_geodesic_path_yields_a_counterexample(self, run_config, mode):
        pc = hexagon_path(GEODESIC)
        verdict = prove_instance(pc, 6, mode=mode, config=run_config)
        assert verdict.status == SAT
        chi = decode_model(verdict.model, 6, 3)
        assert verify_counterexample(chi, pc) == []
        assert verdict.to_dict(include_model=True)["model"] == verdict.model

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            build_instance_formula(hexagon_path(GEODESIC), 6, "greedy", dedupe=False)


class TestCaseHelpers:
    def test_default_revisits(self):
        assert default_revisits(4, 11, 7) == [0, 1, 2, 3]
        assert default_revisits(6, 12, 7) == [1]

    def test_reduction_for_d4_n11(self):
        check = reduction_check(4, 11, 7, known_table())
        assert check["applies"]
        assert check["holds"]
        assert check["upper_bounds"]["10"] == 5

    def test_reduction_without_bounds(self):
        assert not reduction_check(2, 6, 3, BoundsTable(1, 0))["holds"]

    def test_exit_codes(self):
        report = CaseReport(6, 12, 7, [1], "lazy")
        for status, code in [("counterexample", 10), ("refuted", 0), ("trivial", 0), ("incomplete", 20)]:
            report.status = status
            assert report.exit_code == code


class TestRunCase:
    def test_already_known_upper_bound(self, run_config):
        report = run_case(2, 6, 4, config=run_config)
        assert report.status == "trivial"
        assert report.exit_code == 0
        assert not (run_config.output_dir / "case_d2_n6_k4").exists()

    def test_already_known_lower_bound(self, run_config):
        report = run_case(6, 12, 6, config=run_config)
        assert report.status == "trivial"
        assert "cannot be refuted" in report.conclusion

    def test_refuted_and_resumed(self, run_config):
        report = run_case(2, 6, 4, [0], config=run_config, bounds=BoundsTable(1, 0))
        assert report.status == "refuted"
        assert report.counts == {"0": 1}
        assert report.conclusion.startswith("Delta(2,6) <= 3 (provided")
        case_dir = run_config.output_dir / "case_d2_n6_k4"
        ledger = json.loads((case_dir / "ledger.json").read_text())
        assert ledger[LONG_WAY_ROUND]["status"] == UNSAT
        assert json.loads((case_dir / "case.json").read_text())["status"] == "refuted"

        again = run_case(2, 6, 4, [0], config=run_config, bounds=BoundsTable(1, 0))
        assert again.status == "refuted"
        assert again.instances[0]["line"] == LONG_WAY_ROUND

    def test_counterexample(self, run_config):
        run_config.write_dimacs = True
        report = run_case(2, 6, 3, [0], config=run_config, bounds=BoundsTable(1, 0))
        assert report.status == "counterexample"
        assert report.exit_code == 10
        assert report.conclusion.endswith("Delta(2,6) >= 3")
        chi = Chirotope.parse(open(report.counterexample).read())
        assert verify_counterexample(chi, hexagon_path(GEODESIC)) == []
        inst_dir = run_config.output_dir / "case_d2_n6_k3" / PivotSequence.from_line(GEODESIC, 2).digest()
        assert (inst_dir / "verdict.json").exists()
        assert (inst_dir / "instance.cnf").read_text().count("p cnf 20") == 1


class TestTargetInstances:
    def test_first_published_row_is_refuted(self, run_config, d6n12_row1):
        run_config.time_limit = 7200
        verdict = prove_instance(d6n12_row1, 12, mode="lazy", config=run_config)
        assert verdict.status == UNSAT

    def test_first_published_row_eager(self, run_config, d6n12_row1):
        run_config.time_limit = 7200
        verdict = prove_instance(d6n12_row1, 12, mode="eager", config=run_config)
        assert verdict.status == UNSAT

    @pytest.mark.parametrize("revisits,index", [(0, 0), (1, 0), (2, 0), (3, 0), (2, 100)])
    def test_d4_n11_samples(self, run_config, revisits, index):
        run_config.time_limit = 7200
        p = list(enumerate_with_revisits(4, 7, revisits, n=11, bounds=known_table()))[index]
        verdict = prove_instance(expand_to_facets(p, 11), 11, mode="lazy", config=run_config)
        assert verdict.status == UNSAT


@pytest.mark.slow
class TestFullSweeps:
    def test_d6_n12_case_is_refuted(self, run_config):
        run_config.time_limit = 7200
        report = run_case(6, 12, 7, config=run_config)
        assert report.status == "refuted"
        assert report.counts == {"1": 10}

    def test_d4_n11_case_is_refuted(self, run_config):
        run_config.time_limit = 7200
        report = run_case(4, 11, 7, config=run_config)
        assert report.status == "refuted"
        assert report.conclusion.startswith("Delta(4,11) ")
        assert "provided" not in report.conclusion
