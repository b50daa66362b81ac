"""
Command-line surface: graph documents, subcommands and the classifier/oracle cross-check
"""

from .commands import (
    cmd_classify,
    cmd_corpus,
    cmd_crosscheck,
    cmd_decompose,
    cmd_oracle,
    render_classify,
    render_crosscheck,
    render_decompose,
    render_oracle,
)
from .crosscheck import CrossChecker, CrossCheckRecord, assert_agreement, enumerate_labelled_graphs
from .documents import (
    canonical_key,
    emit_graph_document,
    generate_corpus,
    graph_hash,
    parse_graph_document,
    read_document,
)

__all__ = [
    'CrossCheckRecord',
    'CrossChecker',
    'assert_agreement',
    'canonical_key',
    'cmd_classify',
    'cmd_corpus',
    'cmd_crosscheck',
    'cmd_decompose',
    'cmd_oracle',
    'emit_graph_document',
    'enumerate_labelled_graphs',
    'generate_corpus',
    'graph_hash',
    'parse_graph_document',
    'read_document',
    'render_classify',
    'render_crosscheck',
    'render_decompose',
    'render_oracle',
]
