"""Crystals B(lambda) and B(infinity) for types A, B, C, D and G2 realized by Young tableaux."""
from .binfty import (
    RepresentativeError,
    bfs_binfty,
    binfty_lower,
    binfty_raise,
    binfty_stats,
    binfty_weight,
    canonicalize,
    is_large,
    is_marginally_large,
    is_valid_representative,
    pad,
    related,
    t_infinity,
)
from .cliff import (
    CliffElement,
    CliffError,
    cliff_step,
    cliff_to_tableau,
    cliff_weight,
    cliff_zero,
    tableau_to_cliff,
    validate_cliff,
)
from .lie_types import (
    FAMILIES,
    LOWERING,
    RAISING,
    LetterError,
    TypeSpec,
    TypeSpecError,
    Weight,
    is_hat_dominant,
    letter_eps_phi,
    letter_step,
    letter_weight,
    make_type_spec,
)
from .serialization import DocumentError, deserialize, serialize, to_dot
from .tableau import (
    CrystalGraph,
    Tableau,
    TableauError,
    apply_plain,
    bfs_highest_weight,
    far_eastern_reading,
    highest_weight_tableau,
    i_signature,
    tableau_stats,
)

__version__ = "0.1.0"
