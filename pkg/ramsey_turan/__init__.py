__version__ = '0.1.0'

from ramsey_turan.base import RamseyTuranException
from ramsey_turan.canonical import (
    are_isomorphic,
    canonical_form,
    canonical_labeling,
)
from ramsey_turan.constructions import (
    BlowupWeights,
    andrasfai,
    balanced_blowup,
    blow_up,
    extremal_blowup,
    is_blowup_of,
    twin_contraction,
)
from ramsey_turan.formulas import (
    f_conjectured,
    fact26_identity,
    formula_point,
    g_value,
    range_index,
)
from ramsey_turan.graph import (
    Graph,
    is_triangle_free,
    new_graph,
)
from ramsey_turan.graph6 import (
    decode_graph6,
    encode_graph6,
)
from ramsey_turan.search import (
    SearchProblem,
    ex_search,
    verify_table,
)
from ramsey_turan.solvers import (
    independence_number,
    max_bipartite_matching,
    maximum_independent_set,
)
from ramsey_turan.transforms import (
    enforce_pair_structure,
    enforce_triple_structure,
    sym,
)
from ramsey_turan.validation import (
    AuditReport,
    extremal_family_audit,
    prop32_audit,
    three_sets_audit,
)

__all__ = [
    'AuditReport',
    'BlowupWeights',
    'Graph',
    'RamseyTuranException',
    'SearchProblem',
    'andrasfai',
    'are_isomorphic',
    'balanced_blowup',
    'blow_up',
    'canonical_form',
    'canonical_labeling',
    'decode_graph6',
    'encode_graph6',
    'enforce_pair_structure',
    'enforce_triple_structure',
    'ex_search',
    'extremal_blowup',
    'extremal_family_audit',
    'f_conjectured',
    'fact26_identity',
    'formula_point',
    'g_value',
    'independence_number',
    'is_blowup_of',
    'is_triangle_free',
    'max_bipartite_matching',
    'maximum_independent_set',
    'new_graph',
    'prop32_audit',
    'range_index',
    'sym',
    'three_sets_audit',
    'twin_contraction',
    'verify_table',
]
