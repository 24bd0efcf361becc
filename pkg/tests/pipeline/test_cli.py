import io
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from lowerzdd.pipeline.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    emit_stats,
    main,
    run_cli,
)
from lowerzdd.pipeline.filter import StageReport
from tests.pipeline.test_files import CYCLE_FILE

PARTITIONS = "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"


class TestCli(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.root = Path(self.directory.name)
        self.graph = self.root / "g.txt"
        self.graph.write_text(CYCLE_FILE)
        self.family = self.root / "a.txt"
        self.family.write_text(PARTITIONS)

    def tearDown(self):
        self.directory.cleanup()

    def run_command(self, *argv):
        out = io.StringIO()
        status = run_cli(build_parser().parse_args([str(a) for a in argv]), out)
        return status, out.getvalue().splitlines()

    def solve(self, *extra):
        return self.run_command("solve", "--graph", self.graph, *extra)

    def test_solve(self):
        status, lines = self.solve("--lower", 3, "--family", self.family, "--enumerate")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines, ["count 3", "1 2", "1 3", "2 3"])

    def test_solve_with_stats(self):
        status, lines = self.solve("--lower", 3, "--family", self.family, "--stats")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines[0], "count 3")
        self.assertEqual(lines[1], "stage time_s nodes cardinality")
        rows = [line.split() for line in lines[2:]]
        self.assertEqual(
            [row[0] for row in rows], ["Z_S", "T_S±", "Z_S↑", "difference"]
        )
        self.assertEqual([row[3] for row in rows], ["1", "1", "8", "3"])

    def test_solve_all_subsets(self):
        status, lines = self.solve("--lower", 3, "--all")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines, ["count 8"])

    def test_solve_with_ratio(self):
        status, lines = self.solve(
            "--ratio", "1.5", "--components", 2, "--family", self.family
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines, ["count 3"])

    def test_ratio_needs_components(self):
        with self.assertLogs("lowerzdd.pipeline.cli", level="ERROR"):
            status, _ = self.solve("--ratio", "1.5")
        self.assertEqual(status, EXIT_USAGE)

    def test_dot_output(self):
        zs = self.root / "zs.gv"
        tspm = self.root / "tspm.gv"
        status, _ = self.solve(
            "--lower", 3, "--family", self.family, "--dot", f"zs={zs}", "--dot",
            f"tspm={tspm}",
        )
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(zs.read_text().startswith("digraph zs {"))
        self.assertIn("style=bold", tspm.read_text())

    def test_budget_exceeded(self):
        with self.assertLogs(level="CRITICAL"):
            status, _ = self.solve("--lower", 3, "--budget", 1)
        self.assertEqual(status, EXIT_BUDGET)

    def test_parse_error(self):
        self.graph.write_text("p 2 1\nw 1 x\n")
        with self.assertLogs("lowerzdd.pipeline.cli", level="ERROR") as logs:
            status, _ = self.run_command("count", "--graph", self.graph)
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn(":2:", logs.output[0])

    def test_invalid_utf8(self):
        self.graph.write_bytes(b"p 2 1\nw 1 1\nw 2 1\ne 1 2 # \xff\xfe\n")
        with self.assertLogs("lowerzdd.pipeline.cli", level="ERROR") as logs:
            status = main(["count", "--graph", str(self.graph)])
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn(":4:", logs.output[0])

    # Tests that a family holding only the empty set filters in a fresh store
    def test_solve_empty_set_family(self):
        self.family.write_text("-\n")
        status, lines = self.solve(
            "--lower", 1, "--family", self.family, "--enumerate", "--budget", 100
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines, ["count 1", "-"])
        status, lines = self.solve("--lower", 3, "--family", self.family)
        self.assertEqual(lines, ["count 0"])

    def test_enumerate_limit(self):
        with mock.patch("lowerzdd.pipeline.cli.settings.ENUMERATE_LIMIT", 2):
            with self.assertLogs("lowerzdd.pipeline.cli", level="ERROR"):
                status, lines = self.solve(
                    "--lower", 3, "--family", self.family, "--enumerate"
                )
        self.assertEqual(status, EXIT_USAGE)
        self.assertEqual(lines, [])

    def test_count(self):
        status, lines = self.run_command(
            "count", "--graph", self.graph, "--family", self.family
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines[0], "count 6")
        self.assertTrue(lines[1].startswith("nodes "))

    def test_count_all_subsets(self):
        status, lines = self.run_command("count", "--graph", self.graph)
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines, ["count 16", "nodes 4"])

    def test_oracle(self):
        status, lines = self.run_command(
            "oracle", "--graph", self.graph, "--lower", 3, "--family", self.family,
            "--enumerate",
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines, ["count 3", "1 2", "1 3", "2 3"])

    # Tests that the brute force and the diagrams agree on every subset
    def test_oracle_matches_solve(self):
        _, solved = self.solve("--lower", 4, "--enumerate")
        _, brute = self.run_command(
            "oracle", "--graph", self.graph, "--lower", 4, "--enumerate"
        )
        self.assertEqual(solved, brute)

    def test_oracle_refuses_large_graphs(self):
        with mock.patch("lowerzdd.pipeline.cli.settings.ORACLE_MAX_EDGES", 3):
            with self.assertLogs("lowerzdd.pipeline.cli", level="ERROR"):
                status, _ = self.run_command(
                    "oracle", "--graph", self.graph, "--lower", 3
                )
        self.assertEqual(status, EXIT_USAGE)

    def test_bound(self):
        status, lines = self.run_command(
            "bound", "--graph", self.graph, "--components", 2, "--ratio", "1", "1.5"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(lines, ["ratio exact floor", "1 4 4", "1.5 16/5 3"])


class TestMain(unittest.TestCase):
    def test_unknown_flag(self):
        with mock.patch("sys.stderr", new_callable=io.StringIO):
            self.assertEqual(main(["solve", "--nope"]), EXIT_USAGE)

    def test_missing_lower_bound(self):
        with mock.patch("sys.stderr", new_callable=io.StringIO):
            self.assertEqual(main(["solve", "--graph", "g.txt"]), EXIT_USAGE)

    def test_bad_dot_stage(self):
        argv = ["solve", "--graph", "g", "--lower", "3", "--dot", "x=y"]
        with mock.patch("sys.stderr", new_callable=io.StringIO) as stderr:
            self.assertEqual(main(argv), EXIT_USAGE)
        self.assertIn("STAGE=PATH", stderr.getvalue())

    def test_missing_graph_file(self):
        with self.assertLogs("lowerzdd.pipeline.cli", level="ERROR"):
            status = main(["count", "--graph", "/nonexistent/graph.txt"])
        self.assertEqual(status, EXIT_USAGE)


class TestEmitStats(unittest.TestCase):
    def test_columns(self):
        reports = [
            StageReport("Z_S", 0.25, 3, 10),
            StageReport("difference", 1.0, 7, 2**70),
        ]
        self.assertEqual(
            emit_stats(reports).splitlines(),
            [
                "stage time_s nodes cardinality",
                "Z_S 0.250 3 10",
                f"difference 1.000 7 {2**70}",
            ],
        )
