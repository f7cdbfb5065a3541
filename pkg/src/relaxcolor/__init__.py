"""Relaxed and defective 2-distant circular colorings.

Exact solver, closed-form families, OBFT-based outerplanar colorings,
reduction gadgets and the text formats/CLI that tie them together.
"""

from .errors import (ColoringError, InvalidInput, InvalidParameter, InvariantViolation, ParseError,
                     ResourceLimit)
from .graph import Graph, OuterEmbedding, find_outer_embedding, make_family, validate_outer_embedding
from .semantics import Coloring, ColoringReport, check, check_defective, check_relaxed, circ_dist
from .solver import (SolverConfig, chromatic_number, decide, every_vertex_relaxed_at_least,
                     forall_valid_colorings, is_colorable, iter_valid_colorings, min_k,
                     no_vertex_relaxed_more_than, some_vertex_relaxed_at_least)
from .families import (closed_form_cchi, gen_G5, gen_H, h_witness, random_outerplanar,
                       witness_coloring)
from .obft import ObftPartition, interior_set, obft_partition, verify_obft_properties
from .outerplanar import color_outerplanar_42_defective, color_outerplanar_52, color_tree_52
from .textio import GraphDocument, emit_coloring, emit_graph, parse_coloring, parse_graph

import types as _types

__all__ = [name for name, obj in list(globals().items())
           if not name.startswith("_") and not isinstance(obj, _types.ModuleType)]
