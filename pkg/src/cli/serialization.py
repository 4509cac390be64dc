"""
JSON payloads for the command-line subcommands.

Key order is fixed by construction, so identical invocations produce
byte-identical output. Infinite dimensions are written as the string "inf".
"""

import json
from typing import Any, Dict, List

from algebra import AdmissibleSequence, is_normalized, p_min
from modules import global_dim, simple_inj_dims, simple_proj_dims
from quiver import ComponentDecomposition, ResolutionQuiver
from retraction import CycleSummary, RetractionChain


def dumps(payload: Any) -> str:
    """Serialize a payload with the fixed formatting used by every subcommand."""
    return json.dumps(payload, indent=2)


def _components(decomposition: ComponentDecomposition) -> List[List[int]]:
    members: List[List[int]] = [[] for _ in decomposition.cycles]
    for vertex, component in enumerate(decomposition.component_of, start=1):
        members[component].append(vertex)
    return members


def _cycles(decomposition: ComponentDecomposition) -> List[Dict[str, Any]]:
    return [
        {"vertices": list(cycle.vertices), "size": cycle.size, "weight": cycle.weight}
        for cycle in decomposition.cycles
    ]


def analysis_payload(
    sequence: AdmissibleSequence,
    quiver: ResolutionQuiver,
    decomposition: ComponentDecomposition,
) -> Dict[str, Any]:
    """Classification, f table, components and cycles of one sequence."""
    return {
        "n": sequence.n,
        "c": list(sequence.c),
        "kind": sequence.kind.name.lower(),
        "self_injective": sequence.self_injective,
        "normalized": is_normalized(sequence),
        "p": p_min(sequence),
        "f": list(quiver.f),
        "components": _components(decomposition),
        "cyclic_vertices": sorted(decomposition.cyclic_vertices),
        "cycles": _cycles(decomposition),
    }


def quiver_payload(quiver: ResolutionQuiver, decomposition: ComponentDecomposition) -> Dict[str, Any]:
    """Arrow table and decomposition of a resolution quiver."""
    return {
        "n": quiver.n,
        "f": list(quiver.f),
        "components": _components(decomposition),
        "cyclic_vertices": sorted(decomposition.cyclic_vertices),
        "cycles": _cycles(decomposition),
    }


def dimensions_payload(sequence: AdmissibleSequence) -> Dict[str, Any]:
    """Projective and injective dimensions of the simples, and the global dimension."""
    payload: Dict[str, Any] = {
        "n": sequence.n,
        "c": list(sequence.c),
        "kind": sequence.kind.name.lower(),
        "projective_dimensions": [d.to_json() for d in simple_proj_dims(sequence)],
    }
    if sequence.is_cycle:
        payload["injective_dimensions"] = [d.to_json() for d in simple_inj_dims(sequence)]
    else:
        payload["injective_dimensions_note"] = (
            "injective dimensions are only computed for cycle algebras; "
            "line algebras have finite global dimension"
        )
    payload["global_dimension"] = global_dim(sequence).to_json()
    return payload


def chain_payload(chain: RetractionChain, summary: CycleSummary) -> Dict[str, Any]:
    """The audited retraction chain and the cycle data it yields."""
    payload = chain.to_dict()
    payload["summary"] = summary.to_dict()
    return payload
