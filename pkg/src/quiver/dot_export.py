"""
Export a resolution quiver as Graphviz DOT text.

Output is deterministic: nodes in ascending order, then one edge per line
in ascending order of the source vertex. Cyclic vertices are drawn as
double circles. To render:

    dot -Tpng -O quiver.gv
"""

from typing import List

from .resolution_quiver import ComponentDecomposition, ResolutionQuiver


def to_dot(quiver: ResolutionQuiver, decomposition: ComponentDecomposition) -> str:
    """
    Render the quiver and its cyclic vertices as a DOT digraph.

    Args:
        quiver: The resolution quiver.
        decomposition: Its component decomposition (marks cyclic vertices).

    Returns:
        DOT source text ending with a newline.
    """
    lines: List[str] = ['digraph resolution_quiver {']
    if quiver.c is not None:
        label = ",".join(str(value) for value in quiver.c)
        lines.append(f'\tgraph [label="c = ({label})"];')

    for vertex in range(1, quiver.n + 1):
        if vertex in decomposition.cyclic_vertices:
            lines.append(
                f'\t"{vertex}" [label="{vertex}", shape=doublecircle, style=bold];'
            )
        else:
            lines.append(f'\t"{vertex}" [label="{vertex}", shape=circle];')

    for vertex in range(1, quiver.n + 1):
        lines.append(f'\t"{vertex}" -> "{quiver.target(vertex)}";')

    lines.append('}')
    return '\n'.join(lines) + '\n'
