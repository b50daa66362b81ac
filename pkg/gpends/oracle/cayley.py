"""
Cayley balls and the empirical ends estimator

The generating set is every non-trivial element of every vertex group, so
the word length of an element is the syllable count of its canonical word.
An end is approximated by a component of B(R) minus the closed ball B(r)
that reaches the outer sphere S(R).
"""

import csv
import enum
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

import networkx as nx

from ..config import Config
from ..exceptions import ResourceCapError
from ..groups import EndsClass, LabelledGraph
from ..validators import validate_at_least
from .words import IDENTITY, CyclicGraphProduct

logger = logging.getLogger(__name__)


class Verdict(enum.Enum):
    ZERO = '0'
    ONE = '1'
    TWO = '2'
    INFINITELY_MANY = 'infinity'
    INCONCLUSIVE = 'inconclusive'

    @property
    def ends(self) -> Optional[EndsClass]:
        """Matching ends class, None for an inconclusive run"""
        if self is Verdict.INCONCLUSIVE:
            return None
        return EndsClass(self.value)


@dataclass
class EstimateReport:
    inner_radius: int
    outer_radius: int
    sphere_sizes: List[int] = field(default_factory=list)
    shell_component_counts: List[int] = field(default_factory=list)
    verdict: Verdict = Verdict.INCONCLUSIVE
    element_count: Optional[int] = None
    cap_exceeded: bool = False

    def to_dict(self) -> dict:
        return {
            'inner_radius': self.inner_radius,
            'outer_radius': self.outer_radius,
            'sphere_sizes': list(self.sphere_sizes),
            'shell_component_counts': list(self.shell_component_counts),
            'verdict': self.verdict.value,
            'element_count': self.element_count,
            'cap_exceeded': self.cap_exceeded,
        }


def _grow(product: CyclicGraphProduct, radius: Optional[int], cap: int) -> nx.Graph:
    """
    Breadth-first Cayley ball; radius None grows until the group is exhausted

    Node attribute ``layer`` is the BFS distance from the identity. Graph
    attributes: ``sphere_sizes``, ``radius`` and ``saturated`` (the ball is
    closed under the generators, i.e. it is the whole finite group).
    """
    ball = nx.Graph()
    ball.add_node(IDENTITY, layer=0)
    sphere_sizes = [1]
    frontier = [IDENTITY]
    layer = 0

    while frontier and (radius is None or layer < radius):
        layer += 1
        next_frontier = []
        for word in frontier:
            for neighbour in product.neighbours(word):
                if neighbour not in ball:
                    if ball.number_of_nodes() >= cap:
                        logger.warning(f"Cayley ball cap of {cap} elements reached at radius {layer}")
                        raise ResourceCapError(
                            f"Cayley ball exceeds {cap} elements at radius {layer}",
                            radius_reached=layer - 1,
                            sphere_sizes=sphere_sizes,
                        )
                    ball.add_node(neighbour, layer=layer)
                    next_frontier.append(neighbour)
                ball.add_edge(word, neighbour)
        if next_frontier:
            sphere_sizes.append(len(next_frontier))
        else:
            layer -= 1
        logger.debug(f"Layer {layer}: {len(next_frontier)} new elements")
        frontier = next_frontier

    # edges leaving the outermost sphere; saturated when none leaves the ball
    saturated = True
    for word in frontier:
        for neighbour in product.neighbours(word):
            if neighbour in ball:
                ball.add_edge(word, neighbour)
            else:
                saturated = False

    ball.graph.update(sphere_sizes=sphere_sizes, radius=len(sphere_sizes) - 1, saturated=saturated)
    return ball


def ball(lg: LabelledGraph, radius: int, cap: Optional[int] = None) -> nx.Graph:
    """
    Cayley ball of the given radius around the identity

    Nodes are CanonicalWord elements with their BFS ``layer``; edges join g
    and g·s for every generator s when both lie in the ball.

    Raises:
        UnsupportedLabelError: If a label is not concrete cyclic
        ResourceCapError: If the ball grows beyond ``cap`` elements
    """
    validate_at_least(radius, 0, 'radius')
    product = CyclicGraphProduct(lg)
    return _grow(product, radius, cap or Config.BALL_CAP)


def exact_order_if_finite(lg: LabelledGraph, cap: Optional[int] = None) -> Optional[int]:
    """Order of the group by exhaustive BFS, None when it is not finite within the cap"""
    product = CyclicGraphProduct(lg)
    try:
        whole = _grow(product, None, cap or Config.BALL_CAP)
    except ResourceCapError:
        return None
    return whole.number_of_nodes()


def shell_components(cayley: nx.Graph, inner: int, outer: int) -> int:
    """Components of B(outer) minus the closed ball B(inner) that meet the sphere S(outer)"""
    layers = nx.get_node_attributes(cayley, 'layer')
    shell = cayley.subgraph(w for w, layer in layers.items() if inner < layer <= outer)
    return sum(
        1 for component in nx.connected_components(shell)
        if any(layers[w] == outer for w in component)
    )


def _increasing_run(counts: List[int], length: int = 3) -> bool:
    """True iff some ``length`` consecutive counts strictly increase"""
    return any(
        all(a < b for a, b in zip(counts[i:i + length], counts[i + 1:i + length]))
        for i in range(len(counts) - length + 1)
    )


def _verdict(counts: List[int], sphere_sizes: List[int]) -> Verdict:
    """
    Verdict of an unsaturated ball from its shell counts

    Every rule, InfinitelyMany included, reads only the top half of the
    inner radii, ``counts[len(counts) // 2:]``. Two needs a non-growing
    outer sphere and InfinitelyMany a growing one; an increasing run means
    at least three strictly increasing counts. Anything else is inconclusive.
    """
    window = counts[len(counts) // 2:]
    if not window:
        return Verdict.INCONCLUSIVE
    if all(count == 1 for count in window):
        return Verdict.ONE

    growing = sphere_sizes[-1] > sphere_sizes[-2]
    if all(count == 2 for count in window) and not growing:
        return Verdict.TWO
    if growing and (max(window) >= 3 or _increasing_run(window)):
        return Verdict.INFINITELY_MANY
    return Verdict.INCONCLUSIVE


def ends_estimate(
    lg: LabelledGraph,
    r_max: Optional[int] = None,
    margin: Optional[int] = None,
    cap: Optional[int] = None,
) -> EstimateReport:
    """
    Estimate the number of ends from shell component counts

    For every inner radius r in 1..r_max the closed ball B(r) is removed from
    B(R), R = r_max + margin, and the components reaching S(R) are counted.

    Args:
        lg: Labelled graph with concrete cyclic labels
        r_max: Largest inner radius (>= 2, defaults to config)
        margin: Gap between the largest inner radius and R (>= 2, defaults to config)
        cap: Ball element cap (defaults to config)

    Returns:
        Report with sphere sizes, shell counts and a verdict; a cap overrun
        gives an inconclusive report with the partial sphere sizes
    """
    r_max = validate_at_least(r_max if r_max is not None else Config.ORACLE_RMAX, 2, 'r_max')
    margin = validate_at_least(margin if margin is not None else Config.ORACLE_MARGIN, 2, 'margin')
    outer = r_max + margin
    report = EstimateReport(inner_radius=r_max, outer_radius=outer)

    try:
        cayley = ball(lg, outer, cap)
    except ResourceCapError as e:
        report.sphere_sizes = e.sphere_sizes
        report.cap_exceeded = True
        logger.warning(f"Estimate inconclusive: {e}")
        return report

    report.sphere_sizes = list(cayley.graph['sphere_sizes'])
    report.shell_component_counts = [shell_components(cayley, r, outer) for r in range(1, r_max + 1)]

    if cayley.graph['saturated']:
        report.verdict = Verdict.ZERO
        report.element_count = cayley.number_of_nodes()
    else:
        report.verdict = _verdict(report.shell_component_counts, report.sphere_sizes)

    logger.debug(
        f"Estimate for {lg.name or 'graph'}: spheres {report.sphere_sizes}, "
        f"shells {report.shell_component_counts}, verdict {report.verdict.value}"
    )
    return report


CSV_FIELDNAMES = ['radius', 'sphere_size', 'shell_components']


def write_estimate_csv(report: EstimateReport, csv_path: Path):
    """
    Write sphere sizes and shell component counts, one row per radius

    shell_components is empty for radii outside 1..r_max.
    """
    with open(csv_path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.DictWriter(f, fieldnames=CSV_FIELDNAMES)
        writer.writeheader()
        for radius, size in enumerate(report.sphere_sizes):
            shells = ''
            if 1 <= radius <= len(report.shell_component_counts):
                shells = report.shell_component_counts[radius - 1]
            writer.writerow({'radius': radius, 'sphere_size': size, 'shell_components': shells})
    logger.info(f"Wrote estimate CSV: {csv_path}")
