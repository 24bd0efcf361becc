"""
Export decision diagrams to graphviz' dot format.

Nodes are grouped into one rank per label. ZDD 0-arcs are dashed and 1-arcs
solid; TDD ZERO-arcs are dashed, POS-arcs solid and NEG-arcs bold. Every
node is also listed as a `// id label child...` record so the file can be
diffed without rendering it, e.g.

    dot -Tpng -O zs.gv
"""
from collections import defaultdict
from typing import Dict, List, TextIO

from lowerzdd.diagrams.base import BOTTOM, TOP, DiagramStore, NodeRef
from lowerzdd.diagrams.tdd import TddStore

ZDD_ARC_STYLES = ("dashed", "solid")
TDD_ARC_STYLES = ("dashed", "solid", "bold")


def _terminal_name(ref: NodeRef) -> str:
    return "T" if ref == TOP else "F"


def _node_name(ref: NodeRef) -> str:
    return _terminal_name(ref) if ref in (BOTTOM, TOP) else str(ref)


def export_dot(store: DiagramStore, root: NodeRef, out: TextIO, name: str = "dd"):
    arc_styles = TDD_ARC_STYLES if isinstance(store, TddStore) else ZDD_ARC_STYLES
    write_line = lambda s: out.write(s + "\n")  # noqa: E731

    layers: Dict[int, List[NodeRef]] = defaultdict(list)
    for ref in store.reachable(root):
        layers[store.label(ref)].append(ref)

    write_line(f"digraph {name} {{")
    for label in sorted(layers):
        for ref in layers[label]:
            kids = " ".join(_node_name(kid) for kid in store.children(ref))
            write_line(f"\t// {ref} {label} {kids}")

    for label in sorted(layers):
        write_line("\t{")
        write_line("\t\trank = same;")
        for ref in layers[label]:
            write_line(f'\t\t"{ref}" [label="{label}", shape = circle];')
        write_line("\t}")
        for ref in layers[label]:
            for style, kid in zip(arc_styles, store.children(ref)):
                if kid == BOTTOM:
                    continue
                write_line(f'\t"{ref}" -> "{_node_name(kid)}" [style={style}];')

    write_line('\t"T" [label="T", shape = box];')
    if root == BOTTOM:
        # n.b. html entity (decimal) for the up tack
        write_line('\t"F" [label="&#8869;", shape = box];')
    write_line("}")
