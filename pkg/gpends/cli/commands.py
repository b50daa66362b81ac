"""
Subcommand implementations

Every command returns a JSON-able report whose key order is fixed, so the
JSON and text renderings are byte-stable for a given input.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence

from ..ends import dictionary_report, ends, render_dot, tree_of_groups
from ..groups import LabelledGraph
from ..oracle import ends_estimate, write_estimate_csv
from .crosscheck import CrossChecker
from .documents import emit_graph_document, generate_corpus

logger = logging.getLogger(__name__)


def cmd_classify(lg: LabelledGraph) -> Dict[str, Any]:
    """
    Ends class and witness, plus the hyperbolicity / virtual freeness
    dictionary when every vertex group is finite

    Returns:
        Report with keys name, ends, witness and, for all-finite inputs,
        hyperbolic, virtually_free, induced_square, induced_cycle
    """
    verdict = ends(lg)
    report: Dict[str, Any] = {'name': lg.name}
    report.update(verdict.to_dict(lg))

    if lg.all_finite:
        report.update(dictionary_report(lg).to_dict(lg))
    else:
        logger.info("Hyperbolicity and virtual freeness omitted: not every vertex group is finite")

    return report


def cmd_decompose(lg: LabelledGraph, dot_path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Tree of groups over finite clique separators

    Args:
        lg: Labelled graph
        dot_path: Optional path for a Graphviz rendering of the tree
    """
    tree = tree_of_groups(lg)
    report = {'name': lg.name}
    report.update(tree.to_dict(lg))

    if dot_path is not None:
        Path(dot_path).write_text(render_dot(tree, lg), encoding='utf-8')
        logger.info(f"Wrote DOT file: {dot_path}")

    return report


def cmd_oracle(
    lg: LabelledGraph,
    r_max: Optional[int] = None,
    margin: Optional[int] = None,
    cap: Optional[int] = None,
    csv_path: Optional[Path] = None,
) -> Dict[str, Any]:
    """
    Empirical ends estimate from a Cayley ball

    A cap overrun is not raised here: the partial report comes back with
    ``cap_exceeded`` set and the caller decides the exit status.

    Raises:
        UnsupportedLabelError: If a vertex group is not concrete cyclic
    """
    estimate = ends_estimate(lg, r_max=r_max, margin=margin, cap=cap)
    if csv_path is not None:
        write_estimate_csv(estimate, csv_path)

    report = {'name': lg.name}
    report.update(estimate.to_dict())
    return report


def cmd_corpus(count: int, n: int, edge_prob: float, seed: int) -> Iterator[str]:
    """One compact JSON document per generated graph (JSON Lines)"""
    for lg in generate_corpus(count, n, edge_prob, seed):
        yield emit_graph_document(lg, indent=None)


def cmd_crosscheck(
    n_max: int,
    label_pool: Sequence[int],
    r_max: Optional[int] = None,
    margin: Optional[int] = None,
    seed: int = 0,
    cap: Optional[int] = None,
    csv_path: Optional[Path] = None,
) -> Dict[str, Any]:
    """
    Compare classifier and oracle on every small cyclic-labelled graph

    The summary is returned even when cases fail; pass it to
    ``assert_agreement`` to turn failures into CrossCheckDisagreement.
    """
    checker = CrossChecker(n_max, label_pool, r_max=r_max, margin=margin, seed=seed, cap=cap)
    return checker.run(csv_path)


def _flag(value: bool) -> str:
    return 'true' if value else 'false'


def _witness_text(witness: Dict[str, Any]) -> str:
    details = [
        f"{key}={{{', '.join(value)}}}" if isinstance(value, list) else f"{key}={value}"
        for key, value in witness.items() if key != 'kind'
    ]
    return ' '.join([witness['kind']] + details)


def render_classify(report: Dict[str, Any]) -> str:
    lines = [
        f"graph: {report['name']}",
        f"ends: {report['ends']}",
        f"witness: {_witness_text(report['witness'])}",
    ]
    if 'hyperbolic' in report:
        lines.append(f"hyperbolic: {_flag(report['hyperbolic'])}")
        lines.append(f"virtually_free: {_flag(report['virtually_free'])}")
        if report['induced_square']:
            lines.append(f"induced_square: {' '.join(report['induced_square'])}")
        if report['induced_cycle']:
            lines.append(f"induced_cycle: {' '.join(report['induced_cycle'])}")
    else:
        lines.append("dictionary: omitted (not every vertex group is finite)")
    return '\n'.join(lines) + '\n'


def render_decompose(report: Dict[str, Any]) -> str:
    lines = [f"graph: {report['name']}", f"nodes: {len(report['nodes'])}"]
    for i, node in enumerate(report['nodes']):
        order = node['order'] if node['order'] is not None else 'infinite'
        lines.append(f"  n{i}: {{{', '.join(node['vertices'])}}} order {order}")
    lines.append(f"edges: {len(report['edges'])}")
    for edge in report['edges']:
        lines.append(
            f"  n{edge['source']} - n{edge['target']}: "
            f"{{{', '.join(edge['label'])}}} order {edge['order']}"
        )
    return '\n'.join(lines) + '\n'


def render_oracle(report: Dict[str, Any]) -> str:
    def numbers(values: List[int]) -> str:
        return ' '.join(str(v) for v in values)

    lines = [
        f"graph: {report['name']}",
        f"radii: r_max={report['inner_radius']} R={report['outer_radius']}",
        f"sphere_sizes: {numbers(report['sphere_sizes'])}",
        f"shell_components: {numbers(report['shell_component_counts'])}",
        f"verdict: {report['verdict']}",
    ]
    if report['element_count'] is not None:
        lines.append(f"order: {report['element_count']}")
    if report['cap_exceeded']:
        lines.append("cap_exceeded: true")
    return '\n'.join(lines) + '\n'


def render_crosscheck(summary: Dict[str, Any]) -> str:
    pool = ','.join(str(order) for order in summary['label_pool'])
    lines = [
        f"n_max: {summary['n_max']}  pool: {pool}  r_max: {summary['r_max']}  margin: {summary['margin']}",
        f"total: {summary['total']}",
        f"conclusive: {summary['conclusive']}",
        f"agreements: {summary['agreements']}",
        f"inconclusive: {summary['inconclusive']}",
        f"disagreements: {summary['disagreements']}",
        f"relabel_mismatches: {summary['relabel_mismatches']}",
    ]
    for record in summary['failed']:
        lines.append(
            f"  FAILED {record['hash']}: classifier {record['classifier']}, "
            f"oracle {record['oracle']}, relabel_stable {record['relabel_stable']}  {record['graph']}"
        )
    return '\n'.join(lines) + '\n'
