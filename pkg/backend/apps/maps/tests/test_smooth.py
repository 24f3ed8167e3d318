# Third-party imports
import numpy as np
import pytest

# Local application imports
from apps.common.exceptions import MissingInverseError
from apps.maps.services import (
    cubic_map,
    mobility_lower_bound,
    mobility_matrix,
    newton_inverse,
    sinh_map,
    with_newton_inverse,
)
from apps.maps.types import LinearForwardMap, SmoothForwardMap


def identity_map(dim):
    return SmoothForwardMap(lambda u: u, dim, dim, jacobian=lambda u: np.eye(dim), inverse=lambda y: y)


def test_cubic_jacobian_matches_finite_differences():
    assert cubic_map().check_jacobian(np.linspace(-2.0, 2.0, 9)[:, None])


def test_wrong_jacobian_fails_the_check():
    wrong = SmoothForwardMap(lambda u: u**3 + u, 1, 1, jacobian=lambda u: np.array([[2.0 * u[0] ** 2 + 1.0]]))
    assert not wrong.check_jacobian([[1.0]])


def test_missing_jacobian_falls_back_to_finite_differences():
    forward_map = SmoothForwardMap(np.sinh, 2, 2)
    np.testing.assert_allclose(forward_map.jacobian_at([0.5, -1.0]), np.diag(np.cosh([0.5, -1.0])), rtol=1e-8)


@pytest.mark.parametrize(("y", "u"), [(0.0, 0.0), (2.0, 1.0), (10.0, 2.0), (-30.0, -3.0)])
def test_newton_inverse_of_the_cubic(y, u):
    forward_map = cubic_map()
    root = newton_inverse(forward_map, [y])
    assert root[0] == pytest.approx(u, abs=1e-10)
    assert abs(forward_map(root)[0] - y) <= 1e-10


def test_bisection_fallback_when_the_jacobian_is_singular():
    forward_map = SmoothForwardMap(lambda u: u**3 + u, 1, 1, jacobian=lambda u: np.zeros((1, 1)))
    root = newton_inverse(forward_map, [10.0])
    assert root[0] == pytest.approx(2.0, abs=1e-10)


def test_with_newton_inverse_inverts_rows():
    forward_map = with_newton_inverse(SmoothForwardMap(np.sinh, 2, 2, jacobian=lambda u: np.diag(np.cosh(u))))
    u = forward_map.invert([[1.0, -2.0], [0.0, 0.5]])
    np.testing.assert_allclose(u, np.arcsinh([[1.0, -2.0], [0.0, 0.5]]), atol=1e-10)


def test_identity_mobility():
    for y in ([0.0, 0.0], [3.0, -1.0]):
        np.testing.assert_allclose(mobility_matrix(identity_map(2), y), np.eye(2))


def test_linear_mobility_is_constant():
    A = np.array([[1.0, 2.0], [0.0, 1.0]])
    np.testing.assert_allclose(mobility_matrix(LinearForwardMap(A), [5.0, 5.0]), A @ A.T)


@pytest.mark.parametrize(("y", "expected"), [(0.0, 1.0), (2.0, 16.0), (10.0, 169.0)])
def test_cubic_mobility(y, expected):
    assert mobility_matrix(cubic_map(), [y])[0, 0] == pytest.approx(expected, rel=1e-9)


def test_mobility_requires_an_inverse():
    with pytest.raises(MissingInverseError):
        mobility_matrix(SmoothForwardMap(np.sinh, 1, 1), [0.0])


def test_mobility_lower_bound_over_probes():
    assert mobility_lower_bound(cubic_map(), np.linspace(-2.0, 2.0, 5)) == pytest.approx(1.0)
    assert mobility_lower_bound(sinh_map(1), [[-1.0], [1.0]]) == pytest.approx(2.0)
