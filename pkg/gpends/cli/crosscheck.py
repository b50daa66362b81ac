"""
Cross-check of the exact classifier against the Cayley-ball oracle
Enumerates small labelled graphs and writes one CSV record per case as it goes
"""

import csv
import itertools
import logging
import random
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence

from tqdm import tqdm

from ..config import Config
from ..exceptions import CrossCheckDisagreement, InputError
from ..ends import ends
from ..groups import EndsClass, GroupLabel, LabelledGraph
from ..oracle import Verdict, ends_estimate
from ..validators import validate_at_least, validate_label_pool
from .documents import canonical_key, emit_graph_document, graph_hash

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CrossCheckRecord:
    """
    Outcome of one case

    ``agree`` is None when the oracle was inconclusive. ``relabel_stable``
    records whether a random relabelling kept the classifier verdict.
    """

    graph_hash: str
    document: str
    classifier: EndsClass
    oracle: Verdict
    agree: Optional[bool]
    relabel_stable: bool

    @property
    def conclusive(self) -> bool:
        return self.oracle is not Verdict.INCONCLUSIVE

    @property
    def failed(self) -> bool:
        return self.agree is False or not self.relabel_stable

    def to_row(self) -> Dict[str, str]:
        return {
            'hash': self.graph_hash,
            'classifier': self.classifier.value,
            'oracle': self.oracle.value,
            'agree': 'n/a' if self.agree is None else str(self.agree).lower(),
            'relabel_stable': str(self.relabel_stable).lower(),
            'graph': self.document,
        }


def enumerate_labelled_graphs(n_max: int, orders: Sequence[int]) -> Iterator[LabelledGraph]:
    """Every labelled graph on 0..n_max vertices with cyclic labels of the given orders"""
    labels = [GroupLabel.concrete_cyclic(order) for order in orders]
    for n in range(n_max + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
            for assignment in itertools.product(labels, repeat=n):
                yield LabelledGraph.build(assignment, edges)


class CrossChecker:
    """
    Runs the classifier and the oracle on every small labelled graph up to
    isomorphism and compares their verdicts
    """

    CSV_FIELDNAMES = ['hash', 'classifier', 'oracle', 'agree', 'relabel_stable', 'graph']

    def __init__(
        self,
        n_max: int,
        label_pool: Sequence[int],
        r_max: Optional[int] = None,
        margin: Optional[int] = None,
        seed: int = 0,
        cap: Optional[int] = None,
    ):
        """
        Initialize the cross-checker

        Args:
            n_max: Largest vertex count to enumerate
            label_pool: Cyclic orders the vertex groups are drawn from (2 and/or 3)
            r_max: Oracle inner radius (defaults to config)
            margin: Oracle margin (defaults to config)
            seed: Seed for the relabelling check
            cap: Cayley ball element cap (defaults to config)

        Raises:
            InputError: If n_max or the pool is out of range
        """
        validate_at_least(n_max, 0, 'n_max')
        if n_max > Config.CROSSCHECK_MAX_VERTICES:
            raise InputError(
                f"n_max must be <= {Config.CROSSCHECK_MAX_VERTICES} "
                f"(GPENDS_CROSSCHECK_MAX_VERTICES), got {n_max}"
            )

        self.n_max = n_max
        self.label_pool = validate_label_pool(label_pool)
        self.r_max = r_max if r_max is not None else Config.CROSSCHECK_RMAX
        self.margin = margin if margin is not None else Config.CROSSCHECK_MARGIN
        self.cap = cap
        self.seed = seed

        # Statistics
        self.stats = {
            'total': 0,
            'conclusive': 0,
            'agreements': 0,
            'inconclusive': 0,
            'disagreements': 0,
            'relabel_mismatches': 0,
        }

        self.start_time = None

    def unique_cases(self) -> List[LabelledGraph]:
        """
        One representative per isomorphism class, ordered by graph hash

        Returns:
            Representatives named by their hash
        """
        seen = set()
        cases = []
        for lg in enumerate_labelled_graphs(self.n_max, self.label_pool):
            key = canonical_key(lg)
            if key in seen:
                continue
            seen.add(key)
            cases.append(lg)

        named = [
            LabelledGraph(lg.graph, lg.labels, name=graph_hash(lg))
            for lg in cases
        ]
        named.sort(key=lambda lg: lg.name)
        logger.info(f"Enumerated {len(named)} cases up to isomorphism (n <= {self.n_max})")
        return named

    def check_case(self, lg: LabelledGraph, rng: random.Random) -> CrossCheckRecord:
        """Classify, estimate and re-classify a random relabelling of one case"""
        classified = ends(lg).ends
        estimate = ends_estimate(lg, r_max=self.r_max, margin=self.margin, cap=self.cap)

        agree = None
        if estimate.verdict is not Verdict.INCONCLUSIVE:
            agree = estimate.verdict.ends is classified

        targets = list(lg.vertices)
        rng.shuffle(targets)
        relabelled = lg.relabel(dict(zip(lg.vertices, targets)))
        relabel_stable = ends(relabelled).ends is classified

        record = CrossCheckRecord(
            graph_hash=lg.name,
            document=emit_graph_document(lg, indent=None),
            classifier=classified,
            oracle=estimate.verdict,
            agree=agree,
            relabel_stable=relabel_stable,
        )
        if agree is False:
            logger.warning(
                f"Disagreement on {lg.name}: classifier {classified.value}, "
                f"oracle {estimate.verdict.value} (shells {estimate.shell_component_counts})"
            )
        if not relabel_stable:
            logger.warning(f"Classifier verdict on {lg.name} changed under relabelling")
        return record

    def _count(self, record: CrossCheckRecord):
        self.stats['total'] += 1
        if record.conclusive:
            self.stats['conclusive'] += 1
            if record.agree:
                self.stats['agreements'] += 1
            else:
                self.stats['disagreements'] += 1
        else:
            self.stats['inconclusive'] += 1
        if not record.relabel_stable:
            self.stats['relabel_mismatches'] += 1

    def run(self, csv_path: Optional[Path] = None) -> Dict[str, Any]:
        """
        Check every case, writing CSV records incrementally when a path is given

        Args:
            csv_path: Optional CSV destination, one flushed row per case

        Returns:
            Summary with the statistics, elapsed time and the failed records
        """
        self.start_time = time.time()
        rng = random.Random(self.seed)
        cases = self.unique_cases()
        failed: List[CrossCheckRecord] = []

        csv_file = None
        writer = None
        if csv_path is not None:
            csv_file = open(csv_path, 'w', newline='', encoding='utf-8')
            writer = csv.DictWriter(csv_file, fieldnames=self.CSV_FIELDNAMES)
            writer.writeheader()
            csv_file.flush()

        try:
            for lg in tqdm(cases, desc="Cross-checking", unit="graph"):
                record = self.check_case(lg, rng)
                self._count(record)
                if record.failed:
                    failed.append(record)

                if writer is not None:
                    writer.writerow(record.to_row())
                    csv_file.flush()
        finally:
            if csv_file is not None:
                csv_file.close()

        elapsed = time.time() - self.start_time
        summary = dict(self.stats)
        summary.update({
            'n_max': self.n_max,
            'label_pool': list(self.label_pool),
            'r_max': self.r_max,
            'margin': self.margin,
            'elapsed_seconds': elapsed,
            'csv_path': str(csv_path) if csv_path is not None else None,
            'failed': [record.to_row() for record in failed],
        })
        return summary


def assert_agreement(summary: Dict[str, Any]):
    """
    Raise when a cross-check summary holds a conclusive disagreement or an
    unstable relabelling

    Raises:
        CrossCheckDisagreement: Listing the offending records
    """
    failed = summary['failed']
    if failed:
        hashes = ', '.join(record['hash'] for record in failed)
        raise CrossCheckDisagreement(
            f"{len(failed)} case(s) failed the cross-check: {hashes}",
            records=failed,
        )
