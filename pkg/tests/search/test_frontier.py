import unittest
from unittest import mock

from lowerzdd.diagrams import (
    BOTTOM,
    TOP,
    NodeBudgetExceeded,
    SignedEdgeSet,
    TddStore,
    ZddStore,
)
from lowerzdd.search import (
    REJECT,
    FrontierSearch,
    FrontierSearchException,
    SearchSpec,
    merge_table_stats,
    run_search,
)


class AcceptAll(SearchSpec):
    def __init__(self, m, arity=2):
        self.m = m
        self.arity = arity

    def root_state(self):
        return ()

    def transition(self, state, index, branch):
        return ()


class RejectAll(AcceptAll):
    def transition(self, state, index, branch):
        return REJECT


class SizeAtMost(SearchSpec):
    """Sets with at most `k` edges; the state is the size so far."""

    def __init__(self, m, k):
        self.m = m
        self.k = k

    def root_state(self):
        return 0

    def transition(self, state, index, branch):
        state += branch
        return REJECT if state > self.k else state


class SizeAtMostUnmerged(SizeAtMost):
    """Same family as SizeAtMost, but every state keeps its whole history."""

    def root_state(self):
        return ()

    def transition(self, state, index, branch):
        state += (branch,)
        return REJECT if sum(state) > self.k else state


class ExactlyOnePositive(SearchSpec):
    arity = 3

    def __init__(self, m):
        self.m = m

    def root_state(self):
        return False

    def transition(self, state, index, branch):
        if branch == 2:
            return REJECT
        if branch == 1:
            return REJECT if state else True
        return state

    def finalize(self, state):
        return state


class TestFrontierSearch(unittest.TestCase):
    def test_accept_all(self):
        store = ZddStore(6)
        self.assertEqual(run_search(AcceptAll(6), store), store.all_subsets())

    def test_reject_all(self):
        self.assertEqual(run_search(RejectAll(6), ZddStore(6)), BOTTOM)

    def test_empty_universe(self):
        self.assertEqual(run_search(AcceptAll(0), ZddStore(0)), TOP)

    def test_rejecting_root(self):
        spec = AcceptAll(3)
        spec.root_state = lambda: REJECT
        self.assertEqual(run_search(spec, ZddStore(3)), BOTTOM)

    def test_pruning(self):
        store = ZddStore(5)
        root = run_search(SizeAtMost(5, 2), store)
        self.assertEqual(store.count(root), 1 + 5 + 10)
        self.assertTrue(all(len(s) <= 2 for s in store.enumerate(root)))

    def test_ternary_search(self):
        store = TddStore(3)
        root = run_search(ExactlyOnePositive(3), store)
        self.assertEqual(
            store.to_sets(root),
            {SignedEdgeSet(frozenset({e})) for e in (1, 2, 3)},
        )
        self.assertEqual(store.audit(), [])

    def test_merge_stats(self):
        search = FrontierSearch(AcceptAll(5), ZddStore(5))
        search.run()
        stats = merge_table_stats(search)
        self.assertEqual(stats.counts, {1: 1, 2: 1, 3: 1, 4: 1, 5: 1})
        self.assertEqual(stats.peak, 1)
        self.assertTrue(search.finished)

    # Tests that states are merged by value at every level
    def test_states_are_merged(self):
        search = FrontierSearch(SizeAtMost(5, 2), ZddStore(5), keep_states=True)
        search.run()
        self.assertEqual(search.stats().counts, {1: 1, 2: 2, 3: 3, 4: 3, 5: 3})
        self.assertEqual(search.level_states[3], [0, 1, 2])

    def test_stats_before_run(self):
        search = FrontierSearch(AcceptAll(2), ZddStore(2))
        with self.assertRaises(FrontierSearchException):
            merge_table_stats(search)

    def test_arity_mismatch(self):
        with self.assertRaises(FrontierSearchException):
            FrontierSearch(AcceptAll(3), TddStore(3))
        with self.assertRaises(FrontierSearchException):
            FrontierSearch(AcceptAll(3, arity=3), ZddStore(3))

    def test_universe_mismatch(self):
        with self.assertRaises(FrontierSearchException):
            FrontierSearch(AcceptAll(3), ZddStore(4))

    def test_state_budget(self):
        store = ZddStore(30, {"NODE_BUDGET": 10}, stage="sizes")
        with self.assertLogs("lowerzdd.search.frontier", level="CRITICAL"):
            with self.assertRaises(NodeBudgetExceeded) as raised:
                run_search(SizeAtMost(30, 30), store)
        self.assertEqual(raised.exception.stage, "sizes")

    def test_elapsed_time(self):
        search = FrontierSearch(AcceptAll(2), ZddStore(2))
        with mock.patch(
            "lowerzdd.search.frontier.perf_counter", side_effect=[10.0, 12.5]
        ):
            search.run()
        self.assertEqual(search.elapsed, 2.5)

    def test_debug_progress(self):
        with self.assertLogs("lowerzdd.search.frontier", level="DEBUG") as logs:
            run_search(AcceptAll(2), ZddStore(2))
        self.assertTrue(any("level 1" in line for line in logs.output))

    # Tests that merging equal states never changes the family built
    def test_merging_keeps_family(self):
        store = ZddStore(8)
        merged = FrontierSearch(SizeAtMost(8, 3), store)
        unmerged = FrontierSearch(SizeAtMostUnmerged(8, 3), store)
        self.assertEqual(merged.run(), unmerged.run())
        for index, count in merged.stats().counts.items():
            self.assertLessEqual(count, unmerged.stats().counts[index])
        self.assertEqual(unmerged.stats().counts[8], 1 + 7 + 21 + 35)

    def test_runs_are_deterministic(self):
        first, second = ZddStore(8), ZddStore(8)
        a = run_search(SizeAtMost(8, 3), first)
        b = run_search(SizeAtMost(8, 3), second)
        self.assertEqual(first.width_profile(a), second.width_profile(b))
        self.assertEqual(first.to_sets(a), second.to_sets(b))
        self.assertEqual(run_search(SizeAtMost(8, 3), first), a)
        self.assertEqual(len(first), len(second))
