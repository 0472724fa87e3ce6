# qhopf: quasi-Hopf algebras, their braided groups, bosonisation and the
# isomorphisms between them, over exact cyclotomic scalars.
from qhopf.errors import QHopfError, VerificationError

__version__ = "0.4.0"

__all__ = ["QHopfError", "VerificationError", "__version__"]
