"""Independent dense model of the Grassmann algebra Lambda(th1..thn).

Basis vectors are indexed by subsets of odd generators (bitmask). The product
table is built by concatenating factor lists and bubble-sorting them while
counting swaps, with no shared code from the sparse kernel. Derivations are
dense matrices assembled from generator images. Values are lists of ints.
"""

from __future__ import annotations

from supertp.core import Element, Monomial


def factors(mask):
    return [i for i in range(8) if mask >> i & 1]


def sorted_sign(seq):
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, None
    swaps = 0
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                swaps += 1
    mask = 0
    for f in seq:
        mask |= 1 << f
    return (-1) ** swaps, mask


class DenseGrassmann:
    def __init__(self, n):
        self.n = n
        self.dim = 1 << n
        self.table = {}
        for a in range(self.dim):
            for b in range(self.dim):
                sign, mask = sorted_sign(factors(a) + factors(b))
                if sign:
                    self.table[a, b] = (sign, mask)

    def basis(self, mask):
        v = [0] * self.dim
        v[mask] = 1
        return v

    def zero(self):
        return [0] * self.dim

    def parity(self, v):
        ps = {bin(i).count("1") % 2 for i, c in enumerate(v) if c}
        assert len(ps) <= 1, "inhomogeneous dense value"
        return ps.pop() if ps else 0

    def mul(self, u, v):
        out = [0] * self.dim
        for a, ca in enumerate(u):
            if not ca:
                continue
            for b, cb in enumerate(v):
                if cb and (a, b) in self.table:
                    sign, mask = self.table[a, b]
                    out[mask] += sign * ca * cb
        return out

    def add(self, u, v, c=1):
        return [a + c * b for a, b in zip(u, v)]

    def scale(self, u, c):
        return [c * a for a in u]

    def from_element(self, e: Element):
        v = [0] * self.dim
        for m, c in e.terms.items():
            assert c.denominator == 1
            v[m.odd] += int(c)
        return v

    def to_element(self, v, signature):
        return Element({Monomial((), i): c for i, c in enumerate(v) if c}, signature)


class DenseDerivation:
    """Matrix of a derivation: column ``mask`` is the image of that basis monomial."""

    def __init__(self, alg: DenseGrassmann, parity, images):
        self.alg = alg
        self.parity = parity
        self.columns = []
        for mask in range(alg.dim):
            fs = factors(mask)
            total = alg.zero()
            for j, f in enumerate(fs):
                left = alg.basis(sum(1 << k for k in fs[:j]))
                right = alg.basis(sum(1 << k for k in fs[j + 1:]))
                piece = alg.mul(alg.mul(left, images[f]), right)
                total = alg.add(total, piece, (-1) ** (parity * j))
            self.columns.append(total)

    def __call__(self, v):
        out = self.alg.zero()
        for mask, c in enumerate(v):
            if c:
                out = self.alg.add(out, self.columns[mask], c)
        return out


class DenseInterpretation:
    """Template operations over the dense model; vector fields are coefficient vectors."""

    def __init__(self, alg, D=None, E=None, delta=None):
        self.alg, self.D, self.E, self.delta = alg, D, E, delta

    def bracket(self, x, y):
        A = self.alg
        px, py = A.parity(x), A.parity(y)
        return A.add(A.mul(x, self.D(y)), A.mul(y, self.D(x)), -((-1) ** (px * py)))

    def pseudo_bracket(self, x, y):
        A = self.alg
        px, py = A.parity(x), A.parity(y)
        return A.add(A.mul(x, self.D(y)), A.mul(y, self.D(x)), (-1) ** (px * py))

    def mul(self, x, y):
        return self.alg.mul(x, y)

    def vbracket(self, X, Y):
        A = self.alg
        px, py = A.parity(X), A.parity(Y)  # coefficient parities
        return A.add(A.mul(X, self.delta(Y)), A.mul(Y, self.delta(X)), (-1) ** ((px + 1) * (py + 1)))

    def act(self, z, X):
        return self.alg.mul(z, X)

    def ternary(self, x, y, z):
        A, E = self.alg, self.E
        px, py, pz = A.parity(x), A.parity(y), A.parity(z)
        out = A.mul(E(x), self.bracket(y, z))
        out = A.add(out, A.mul(E(y), self.bracket(z, x)), (-1) ** (px * (py + pz)))
        return A.add(out, A.mul(E(z), self.bracket(x, y)), (-1) ** ((px + py) * pz))

    def der(self, x):
        return self.E(x)

    def combine(self, coeffs, values, carrier):
        out = self.alg.zero()
        for c, v in zip(coeffs, values):
            out = self.alg.add(out, v, c)
        return out
