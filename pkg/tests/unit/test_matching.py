"""Tests for IoU matching and the event-level report."""

import itertools
import random
from pathlib import Path

import pytest

from hitlsim.events.frames import EventInterval
from hitlsim.events.matching import iou, iou_matrix, match_events, precision_recall
from hitlsim.exceptions import InvalidArgumentError
from hitlsim.metrics.accuracy import detection_fnr
from hitlsim.store.intervals import read_intervals


def intervals(*pairs: tuple[int, int]) -> list[EventInterval]:
    return [EventInterval(s, e) for s, e in pairs]


def random_intervals(rng: random.Random, count: int, span: int = 200) -> list[EventInterval]:
    out = []
    for _ in range(count):
        start = rng.randint(0, span)
        out.append(EventInterval(start, start + rng.randint(0, 40)))
    return out


def naive_iou(a: EventInterval, b: EventInterval) -> float:
    fa = set(range(a.start_frame, a.end_frame + 1))
    fb = set(range(b.start_frame, b.end_frame + 1))
    return len(fa & fb) / len(fa | fb)


def naive_greedy(
    gt: list[EventInterval], pred: list[EventInterval], threshold: float
) -> list[tuple[int, int]]:
    gt, pred = sorted(gt), sorted(pred)
    pairs = []
    for g, a in enumerate(gt):
        for p, b in enumerate(pred):
            score = naive_iou(a, b)
            if score > threshold:
                pairs.append((score, g, p))
    pairs.sort(key=lambda c: (-c[0], c[1], c[2]))
    used_g: set[int] = set()
    used_p: set[int] = set()
    accepted = []
    for _, g, p in pairs:
        if g not in used_g and p not in used_p:
            used_g.add(g)
            used_p.add(p)
            accepted.append((g, p))
    return accepted


class TestIou:
    """Tests for interval IoU."""

    def test_partial_overlap(self) -> None:
        assert iou(EventInterval(10, 20), EventInterval(15, 25)) == pytest.approx(6 / 16)

    def test_identity(self) -> None:
        assert iou(EventInterval(3, 8), EventInterval(3, 8)) == 1.0

    def test_disjoint(self) -> None:
        assert iou(EventInterval(0, 4), EventInterval(10, 12)) == 0.0

    def test_adjacent_is_disjoint(self) -> None:
        assert iou(EventInterval(0, 4), EventInterval(5, 9)) == 0.0

    def test_random_pairs_match_set_oracle(self) -> None:
        rng = random.Random(11)
        for _ in range(500):
            a, b = random_intervals(rng, 2, span=60)
            score = iou(a, b)
            assert score == pytest.approx(naive_iou(a, b))
            assert score == iou(b, a)
            assert 0.0 <= score <= 1.0
            assert (score == 1.0) == (a == b)

    def test_matrix_agrees_with_scalar(self) -> None:
        rng = random.Random(3)
        gt = random_intervals(rng, 5)
        pred = random_intervals(rng, 4)
        matrix = iou_matrix(gt, pred)
        assert matrix.shape == (5, 4)
        for g, p in itertools.product(range(5), range(4)):
            assert matrix[g, p] == pytest.approx(iou(gt[g], pred[p]))

    def test_matrix_empty_side(self) -> None:
        assert iou_matrix([], intervals((0, 1))).shape == (0, 1)


class TestMatchEvents:
    """Tests for greedy one-to-one matching."""

    def test_perfect_match(self) -> None:
        report = match_events(intervals((0, 9)), intervals((0, 9)))
        assert (report.tp, report.fp, report.fn_) == (1, 0, 0)
        assert report.precision == 1.0
        assert report.recall == 1.0

    def test_disjoint(self) -> None:
        report = match_events(intervals((0, 9)), intervals((100, 109)))
        assert (report.tp, report.fp, report.fn_) == (0, 1, 1)

    def test_blocked_duplicate_prediction(self) -> None:
        report = match_events(
            intervals((0, 9), (20, 29)), intervals((0, 9), (0, 8), (50, 59))
        )
        assert (report.tp, report.fp, report.fn_) == (1, 2, 1)
        assert report.matches[0].iou == 1.0

    def test_mean_iou(self) -> None:
        report = match_events(intervals((0, 9), (20, 29)), intervals((0, 9), (20, 27)))
        assert report.mean_iou == pytest.approx((1.0 + 0.8) / 2)
        assert match_events(intervals((0, 9)), []).mean_iou is None

    def test_threshold_is_strict(self) -> None:
        # IoU exactly 0.5: (0,9) vs (0,4) -> 5/10
        report = match_events(intervals((0, 9)), intervals((0, 4)), threshold=0.5)
        assert report.tp == 0

    def test_empty_predictions(self) -> None:
        report = match_events(intervals((0, 9)), [])
        assert report.precision is None
        assert report.recall == 0.0

    def test_both_empty(self) -> None:
        report = match_events([], [])
        assert (report.tp, report.fp, report.fn_) == (0, 0, 0)
        assert precision_recall(report) == (None, None)

    def test_bad_threshold(self) -> None:
        with pytest.raises(InvalidArgumentError):
            match_events([], [], threshold=1.5)

    def test_overlap_within_list_warns(self) -> None:
        report = match_events(intervals((0, 9), (5, 15)), intervals((0, 9)))
        assert len(report.warnings) == 1
        assert "overlap" in report.warnings[0]

    def test_overlap_with_non_adjacent_interval_warns(self) -> None:
        report = match_events([], intervals((2, 3), (5, 6), (0, 10)))
        assert len(report.warnings) == 2
        assert all(str(EventInterval(0, 10)) in w for w in report.warnings)
        assert str(EventInterval(5, 6)) in report.warnings[1]

    def test_table1_fixture(self, fixtures_dir: Path) -> None:
        gt = read_intervals(fixtures_dir / "table1_gt.csv")
        pred = read_intervals(fixtures_dir / "table1_pred.csv")
        report = match_events(gt, pred, 0.5)
        assert (report.gt_count, report.pred_count) == (40, 41)
        assert (report.tp, report.fp, report.fn_) == (30, 11, 10)
        assert report.precision == pytest.approx(30 / 41)
        assert round(report.precision, 3) == 0.732
        assert report.recall == 0.75
        assert detection_fnr(report) == pytest.approx(0.25)

    def test_random_instances_match_naive_greedy(self) -> None:
        rng = random.Random(500)
        for _ in range(500):
            gt = random_intervals(rng, rng.randint(0, 6), span=80)
            pred = random_intervals(rng, rng.randint(0, 6), span=80)
            threshold = rng.choice([0.0, 0.25, 0.5, 0.75])
            report = match_events(gt, pred, threshold)
            assert [(m.gt_index, m.pred_index) for m in report.matches] == naive_greedy(
                gt, pred, threshold
            )
            assert report.tp + report.fp == report.pred_count
            assert report.tp + report.fn_ == report.gt_count
            assert report.tp <= min(report.gt_count, report.pred_count)
            assert all(m.iou > threshold for m in report.matches)
            assert len({m.gt_index for m in report.matches}) == report.tp
            assert len({m.pred_index for m in report.matches}) == report.tp

    def test_threshold_monotonicity(self) -> None:
        rng = random.Random(77)
        for _ in range(200):
            gt = random_intervals(rng, rng.randint(0, 8))
            pred = random_intervals(rng, rng.randint(0, 8))
            counts = [match_events(gt, pred, t).tp for t in (0.0, 0.2, 0.4, 0.6, 0.8)]
            assert counts == sorted(counts, reverse=True)

    def test_permutation_stability(self) -> None:
        rng = random.Random(8)
        for _ in range(200):
            gt = random_intervals(rng, rng.randint(0, 6))
            pred = random_intervals(rng, rng.randint(0, 6))
            base = match_events(gt, pred)
            rng.shuffle(gt)
            rng.shuffle(pred)
            shuffled = match_events(gt, pred)
            assert (shuffled.tp, shuffled.fp, shuffled.fn_) == (base.tp, base.fp, base.fn_)
            assert shuffled.matches == base.matches


class TestPrecisionRecall:
    """Tests for the precision/recall accessor."""

    def test_table1_counts(self) -> None:
        gt = [EventInterval(i * 100, i * 100 + 49) for i in range(40)]
        pred = [EventInterval(i * 100, i * 100 + 49) for i in range(30)]
        pred += [EventInterval(5000 + i * 100, 5000 + i * 100 + 9) for i in range(11)]
        precision, recall = precision_recall(match_events(gt, pred))
        assert precision == pytest.approx(0.7317, abs=1e-4)
        assert recall == 0.75

    def test_no_predictions(self) -> None:
        gt = intervals(*((i * 10, i * 10 + 5) for i in range(5)))
        assert precision_recall(match_events(gt, [])) == (None, 0.0)

    def test_all_correct(self) -> None:
        events = intervals((0, 5), (10, 15), (20, 25))
        assert precision_recall(match_events(events, events)) == (1.0, 1.0)
