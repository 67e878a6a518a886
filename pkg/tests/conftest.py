import pytest

from bbq.cartan import validate_datum
from bbq.freealg import FreeAlgebra
from bbq.lform import LForm, NuParams


def make_lform(a, cutoffs=None, symmetrizer=None, max_ht=6, nu=None):
    datum = validate_datum(a, symmetrizer=symmetrizer, cutoffs=cutoffs,
                           default_cutoff=max_ht)
    alg = FreeAlgebra(datum, max_ht=max_ht)
    return LForm(alg, NuParams(datum, nu))


@pytest.fixture(scope="session")
def lf_real():
    """Rank 1 real: sl_2-type."""
    return make_lform([[2]])


@pytest.fixture(scope="session")
def lf_iso():
    """Rank 1 isotropic imaginary."""
    return make_lform([[0]])


@pytest.fixture(scope="session")
def lf_im():
    """Rank 1 non-isotropic imaginary (a_ii = -2)."""
    return make_lform([[-2]])


@pytest.fixture(scope="session")
def lf_real_iso():
    """Rank 2: one real node, one isotropic node, a = -1."""
    return make_lform([[2, -1], [-1, 0]], max_ht=6)


@pytest.fixture(scope="session")
def lf_real_real():
    """Rank 2 real-real with a_ij = -1 (sl_3-type)."""
    return make_lform([[2, -1], [-1, 2]], max_ht=6)


@pytest.fixture(scope="session")
def lf_real_im():
    """Rank 2: one real node, one non-isotropic imaginary node, a = -1."""
    return make_lform([[2, -1], [-1, -2]], symmetrizer=[1, 1], max_ht=6)
