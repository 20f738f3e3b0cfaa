"""Iwahori invariants of unramified principal series, modelled in K-theory.

Everything on the K-theory side lives over the dual root system D (roots of
the dual group are the coroots of G).  That side labels the roots of the
dual Borel as negative, and we realize this by computing with D's usual
positivity and then applying the flip N: e^{λ} -> e^{-λ} to every
coefficient (Weyl labels are unchanged).  The flip is applied exactly once,
in :meth:`PadicContext.flip`, when fixed-point and stable classes are built.

With this convention

    ι_w|_w           = ∏_{β>0} (1 - e^{-wβ})(1 - q e^{wβ})
    π(T_α) F         = O(-ρ) ⊗ (N(τ⁻_α) ∙ (O(ρ) ⊗ F))
    π(θ_λ) F         = e^{λ} ∙ F  (multiply the w-coefficient by e^{wλ})
    g_w              = q^{ℓ(w)} (ι_w)_{-ρ} / ∏_{β>0, wβ>0} (1 - e^{-wβ}) ∏_{β>0, wβ<0} (q - e^{-wβ})
    φ_w              = q^{ℓ(w)/2} (stab₋(w))_{-ρ}

and g_w, φ_w are the avatars of the Casselman basis and of the normalized
characteristic functions.

Normalization conventions chosen here:
δ_B^{1/2}(ϖ^μ) = q^{-⟨ρ_G, μ⟩}, where ⟨ρ_G, μ⟩ is the height of μ in D's
simple roots; the pairing is Σ_w F|_w(τ) G|_w(τ^{-1}) / ∧T_w(τ^{-1}) with no
extra scalar, so the Macdonald comparison carries the factor q^{dim G/B}.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .exactring import CharacterAssignment, LaurentPoly, RationalFn, SingularCharacter
from .hecke import TransitionData, demazure_lusztig
from .rootdata import RootSystem, WeylElt, build_root_system
from .stable import stab_normalized
from .twisted import DualElt, GroupAlgElt, TwistedAlgebra, bullet_act, twist_line_bundle

Matrix = list[list[Fraction]]


class PadicContext:
    def __init__(self, cartan_type):
        self.group: RootSystem = build_root_system(cartan_type)
        self.dual: RootSystem = self.group.dual_system
        self.alg = TwistedAlgebra(self.dual)
        self.W = self.alg.W
        self.rank = self.dual.rank
        self.rho = self.dual.rho
        self.dim = len(self.dual.positive_roots)
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"PadicContext({self.group.label})"

    # conventions
    def flip(self, x):
        """N: e^{λ} -> e^{-λ} on coefficients; an involution."""
        if isinstance(x, RationalFn):
            return x.invert_weights()
        if isinstance(x, (DualElt, GroupAlgElt)):
            return x.map_coefficients(lambda p: p.invert_weights())
        raise TypeError(f"cannot flip {type(x).__name__}")

    def twist(self, F: DualElt, weight: Sequence[int]) -> DualElt:
        return twist_line_bundle(F, weight)

    def minus_rho(self, F: DualElt) -> DualElt:
        return twist_line_bundle(F, self.dual.neg(self.rho))

    def character(self, value: str | CharacterAssignment) -> CharacterAssignment:
        from .exactring import parse_character
        if isinstance(value, CharacterAssignment):
            return value
        return parse_character(value, self.dual.cartan)

    # classes
    def fixed_point(self, w: WeylElt) -> DualElt:
        return self.flip(self.alg.fixed_point_class(w))

    def stab(self, sign: str, w: WeylElt) -> DualElt:
        key = ("stab", sign, w.index)
        if key not in self._cache:
            self._cache[key] = self.flip(stab_normalized(self.alg, sign, w))
        return self._cache[key]

    def g_denominator(self, w: WeylElt, invert: bool = False) -> RationalFn:
        """∏_{β>0, wβ>0} (1 - e^{-wβ}) ∏_{β>0, wβ<0} (q - e^{-wβ}), or its inverse.

        q - e^{λ} is stored as q(1 - q^{-1}e^{λ}) so the inverse stays factored.
        """
        alg, rs = self.alg, self.dual
        atom = alg.inv_binomial if invert else alg.binomial
        out = alg.one
        for b in rs.positive_roots:
            nwb = rs.neg(w.act(b))
            if rs.is_positive_root(rs.neg(nwb)):
                out = out * atom(nwb)
            else:
                out = out * alg.qpow(-2 if invert else 2) * atom(nwb, -2)
        return out

    def basis_g(self, w: WeylElt) -> DualElt:
        key = ("g", w.index)
        if key not in self._cache:
            scale = self.alg.qpow(2 * w.length) * self.g_denominator(w, invert=True)
            self._cache[key] = self.minus_rho(self.fixed_point(w)) * scale
        return self._cache[key]

    def basis_phi(self, w: WeylElt) -> DualElt:
        key = ("phi", w.index)
        if key not in self._cache:
            self._cache[key] = self.minus_rho(self.stab("-", w)) * self.alg.qpow(w.length)
        return self._cache[key]

    # Hecke action
    def pi_T(self, i: int, F: DualElt) -> DualElt:
        op = self.flip(demazure_lusztig(self.alg, "tau-", i))
        return self.minus_rho(bullet_act(op, self.twist(F, self.rho)))

    def pi_theta(self, weight: Sequence[int], F: DualElt) -> DualElt:
        return self.twist(F, weight)

    def c_factor(self, beta: Sequence[int]) -> RationalFn:
        """c_β = (1 - q^{-1} e^{β}) / (1 - e^{β})."""
        return self.alg.binomial(beta, -2) * self.alg.inv_binomial(beta)

    def J_factor(self, i: int, w: WeylElt) -> RationalFn:
        a = self.dual.simple_roots[i]
        if self.W.right_mult(w, i).length > w.length:
            wa = w.act(a)
            return self.c_factor(wa) * self.c_factor(self.dual.neg(wa))
        return self.alg.one

    def expand(self, F: DualElt, basis: str) -> dict[WeylElt, RationalFn]:
        """Coefficients of F in the g or φ basis (both triangular, lower ends first)."""
        build = {"g": self.basis_g, "phi": self.basis_phi}[basis]
        rest = dict(F.coeffs)
        out: dict[WeylElt, RationalFn] = {}
        for v in sorted(self.W, key=lambda u: (u.length, u.index)):
            c = rest.pop(v, None)
            if c is None or c.is_zero():
                continue
            b = build(v)
            coeff = c / b.restrict(v)
            out[v] = coeff
            for u, p in b.coeffs.items():
                if u != v:
                    val = rest.get(u, self.alg.zero) - coeff * p
                    if val.is_zero():
                        rest.pop(u, None)
                    else:
                        rest[u] = val
        if rest:
            raise ArithmeticError(f"expansion in the {basis} basis left a remainder")
        return out

    def pi_T_matrix(self, i: int, basis: str) -> TransitionData:
        """Entry (w, y): coefficient of basis_y in π(T_i) basis_w."""
        build = {"g": self.basis_g, "phi": self.basis_phi}[basis]
        table = {}
        for w in self.W:
            for y, c in self.expand(self.pi_T(i, build(w)), basis).items():
                table[(w.index, y.index)] = c
        return TransitionData(self.alg, f"piT{i + 1}-{basis}", table)

    def expected_pi_T_matrix(self, i: int, basis: str) -> TransitionData:
        """The Casselman-side (g) or characteristic-function (φ) formulas."""
        alg, W = self.alg, self.W
        q = alg.q
        table = {}
        for w in W:
            ws = W.right_mult(w, i)
            if basis == "g":
                wa = w.act(self.dual.simple_roots[i])
                table[(w.index, w.index)] = q * (1 - self.c_factor(wa))
                table[(w.index, ws.index)] = q * self.J_factor(i, w)
            elif ws.length < w.length:
                table[(w.index, ws.index)] = q
                table[(w.index, w.index)] = q - 1
            else:
                table[(w.index, ws.index)] = alg.one
        table = {k: v for k, v in table.items() if not v.is_zero()}
        return TransitionData(alg, f"piT{i + 1}-{basis}-expected", table)

    # transition matrices
    def transition_matrices(self) -> tuple[TransitionData, TransitionData]:
        """(a, b) with f_w = Σ_y a_{w,y} φ_y and φ_w = Σ_y b_{w,y} f_y."""
        if "ab" in self._cache:
            return self._cache["ab"]
        alg, W, rs = self.alg, self.W, self.dual
        a_tab, b_tab = {}, {}
        for w in W:
            for y in W:
                sp = self.stab("+", y).restrict(w)
                if not sp.is_zero():
                    a_tab[(w.index, y.index)] = alg.qpow(2 * w.length - y.length) * sp * self.g_denominator(w, invert=True)
                sm = self.stab("-", w).restrict(y)
                if not sm.is_zero():
                    inv = alg.one
                    for b in rs.positive_roots:
                        yb = y.act(b)
                        inv = inv * (alg.inv_binomial(yb, 2) if rs.is_positive_root(yb) else alg.inv_binomial(yb))
                    b_tab[(w.index, y.index)] = alg.qpow(w.length - 2 * y.length) * sm * inv
        out = (TransitionData(alg, "padic-a", a_tab), TransitionData(alg, "padic-b", b_tab))
        self._cache["ab"] = out
        return out

    def transition_by_expansion(self) -> TransitionData:
        """a_{w,y} read off from expanding g_w in the φ basis."""
        table = {}
        for w in self.W:
            for y, c in self.expand(self.basis_g(w), "phi").items():
                table[(w.index, y.index)] = c
        return TransitionData(self.alg, "padic-a-expanded", table)

    # characters and the Weyl action on them
    def act_character(self, x: WeylElt, tau: CharacterAssignment) -> CharacterAssignment:
        """xτ, with e^{λ}(xτ) = e^{x^{-1}λ}(τ)."""
        xinv = self.W.inverse(x)
        if tau.omega is not None:
            basis = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
            omega = tuple(tau.weight_value(xinv.act(b)) for b in basis)
            return CharacterAssignment(tau.q, omega=omega, cartan=tau.cartan, sqrt_q=tau.sqrt_q)
        alpha = tuple(tau.weight_value(xinv.act(a)) for a in self.dual.simple_roots)
        return CharacterAssignment(tau.q, alpha=alpha, cartan=tau.cartan, sqrt_q=tau.sqrt_q)

    def is_regular(self, tau: CharacterAssignment) -> bool:
        q = Fraction(tau.q)
        for b in self.dual.roots:
            v = tau.weight_value(b)
            if v in (1, q, 1 / q):
                return False
        return True

    def random_character(self, rng: random.Random) -> CharacterAssignment:
        """A regular character with values on fundamental weights and q a square."""
        while True:
            root = rng.choice([2, 3, 5])
            q = Fraction(root * root)
            omega = tuple(Fraction(rng.choice([-1, 1]) * rng.randint(2, 11), rng.randint(1, 7))
                          for _ in range(self.rank))
            tau = CharacterAssignment(q, omega=omega, cartan=self.dual.cartan, sqrt_q=Fraction(root))
            if self.is_regular(tau):
                return tau

    # intertwiners
    def intertwiner_simple(self, i: int, tau: CharacterAssignment, basis: str = "f") -> Matrix:
        """Matrix of I_{s_i}^τ : I(τ)^I -> I(s_i τ)^I; column w holds the image of basis_w."""
        if not self.is_regular(tau):
            raise SingularCharacter("character is not regular")
        W = self.W
        n = len(W)
        a = self.dual.simple_roots[i]
        c_pos = tau(self.c_factor(a))
        c_neg = tau(self.c_factor(self.dual.neg(a)))
        q = Fraction(tau.q)
        M = [[Fraction(0)] * n for _ in range(n)]
        for w in W:
            sw = W.left_mult(i, w)
            up = sw.length > w.length
            if basis == "f":
                M[sw.index][w.index] = c_neg if up else 1 / c_pos
            elif basis == "phi":
                if up:
                    M[sw.index][w.index] = 1 / (q * c_pos)
                    M[w.index][w.index] = 1 - 1 / c_pos
                else:
                    M[sw.index][w.index] = 1 / c_pos
                    M[w.index][w.index] = 1 - 1 / (q * c_pos)
            else:
                raise ValueError(f"unknown basis {basis!r}")
        return M

    def intertwiner(self, w: WeylElt, tau: CharacterAssignment, basis: str = "f") -> Matrix:
        """I_w^τ built along the canonical word: I_{s x}^τ = I_x^{sτ} I_s^τ."""
        n = len(self.W)
        if w.length == 0:
            return identity_matrix(n)
        i = w.word[0]
        rest = self.W.left_mult(i, w)
        s = self.W.simple[i]
        first = self.intertwiner_simple(i, tau, basis)
        return matmul(self.intertwiner(rest, self.act_character(s, tau), basis), first)

    def weyl_image_scalar(self, i: int, w: WeylElt, tau: CharacterAssignment) -> Fraction:
        """(s ⊗ 1)(g_w) = κ · g_{s w} in K_{sτ}; returns κ."""
        from .twisted import weyl_act_dual
        s = self.W.simple[i]
        sw = self.W.left_mult(i, w)
        image = weyl_act_dual(s, self.basis_g(w)).restrict(sw)
        stau = self.act_character(s, tau)
        return stau(image) / stau(self.basis_g(sw).restrict(sw))

    def weyl_image_expected(self, i: int, w: WeylElt, tau: CharacterAssignment) -> Fraction:
        """c_{-α}(τ) when s w > w, else 1/c_α(τ): the f-basis intertwiner entry."""
        a = self.dual.simple_roots[i]
        if self.W.left_mult(i, w).length > w.length:
            return tau(self.c_factor(self.dual.neg(a)))
        return 1 / tau(self.c_factor(a))

    # spherical class, Macdonald and Casselman-Shalika
    def spherical_class(self) -> DualElt:
        out = self.alg.dual({})
        for w in self.W:
            out = out + self.basis_phi(w)
        return out

    def spherical_by_localization(self) -> DualElt:
        alg, rs = self.alg, self.dual
        coeffs = {}
        for w in self.W:
            inv = alg.product(alg.inv_binomial(rs.neg(w.act(b))) for b in rs.positive_roots)
            coeffs[w] = self.minus_rho(self.fixed_point(w)).restrict(w) * inv
        return alg.dual(coeffs)

    def half_modulus(self, mu: Sequence[int]) -> RationalFn:
        """δ_B^{1/2}(ϖ^μ) = q^{-⟨ρ_G, μ⟩}."""
        height = sum(self.dual.to_simple_coords(mu))
        if (2 * height).denominator != 1:
            raise ValueError(f"⟨ρ, μ⟩ = {height} is not a half-integer")
        return self.alg.qpow(-int(2 * height))

    def is_dominant(self, mu: Sequence[int]) -> bool:
        return all(m >= 0 for m in mu)

    def _check_dominant(self, mu: Sequence[int]) -> tuple[int, ...]:
        mu = tuple(int(m) for m in mu)
        if len(mu) != self.rank:
            raise ValueError(f"μ needs {self.rank} coordinates")
        if not self.is_dominant(mu):
            raise ValueError(f"μ = {mu} is not dominant")
        return mu

    def hecke_lattice_action(self, mu: Sequence[int], F: DualElt) -> DualElt:
        """π(e_{Iϖ^μI}) F = δ^{1/2}(ϖ^μ) π(θ_μ) F."""
        return self.pi_theta(mu, F) * self.half_modulus(mu)

    def tangent_character(self, w: WeylElt) -> RationalFn:
        """∧T_w of the cotangent bundle at w; equals ι_w|_w."""
        return self.fixed_point(w).restrict(w)

    def inverse_tangent_character(self, w: WeylElt, flipped: bool = False) -> RationalFn:
        """1/∧T_w, or its image under N, assembled from inverse atoms."""
        alg, rs = self.alg, self.dual
        sign = -1 if flipped else 1
        out = alg.one
        for b in rs.positive_roots:
            wb = w.act(b)
            out = out * alg.inv_binomial(tuple(-sign * c for c in wb)) * alg.inv_binomial(tuple(sign * c for c in wb), 2)
        return out

    def pairing(self, F: DualElt, G: DualElt) -> RationalFn:
        """Σ_w F|_w(τ) G|_w(τ^{-1}) / ∧T_w(τ^{-1}), as a function of τ."""
        out = self.alg.zero
        for w, c in F.coeffs.items():
            g = G.coeffs.get(w)
            if g is not None:
                out = out + c * self.flip(g) * self.inverse_tangent_character(w, flipped=True)
        return out

    def macdonald_k_side(self, mu: Sequence[int]) -> RationalFn:
        mu = self._check_dominant(mu)
        phi = self.spherical_class()
        return self.pairing(self.hecke_lattice_action(mu, phi), phi)

    def macdonald_closed(self, mu: Sequence[int]) -> RationalFn:
        """q^{dim} δ^{1/2} Σ_w e^{wμ} ∏_{β>0} (1 - q^{-1} e^{-wβ}) / (1 - e^{-wβ})."""
        mu = self._check_dominant(mu)
        alg, rs = self.alg, self.dual
        total = alg.zero
        for w in self.W:
            term = alg.e(w.act(mu))
            for b in rs.positive_roots:
                nwb = rs.neg(w.act(b))
                term = term * alg.binomial(nwb, -2) * alg.inv_binomial(nwb)
            total = total + term
        return alg.qpow(2 * self.dim) * self.half_modulus(mu) * total

    def whittaker_functional(self, F: DualElt) -> RationalFn:
        """∏_{β>0} (1 - q^{-1} e^{β}) · p_*(F ⊗ O(ρ))."""
        alg = self.alg
        G = self.twist(F, self.rho)
        push = alg.zero
        for w, c in G.coeffs.items():
            push = push + c * self.inverse_tangent_character(w)
        return self.whittaker_prefactor() * push

    def whittaker_prefactor(self) -> RationalFn:
        return self.alg.product(self.alg.binomial(b, -2) for b in self.dual.positive_roots)

    def whittaker_k_side(self, mu: Sequence[int]) -> RationalFn:
        mu = tuple(int(m) for m in mu)
        if not self.is_dominant(mu):
            return self.alg.zero
        return self.whittaker_functional(self.hecke_lattice_action(mu, self.spherical_class()))

    def whittaker_sum(self, mu: Sequence[int]) -> RationalFn:
        """δ^{1/2} ∏(1 - q^{-1} e^{β}) Σ_w e^{wμ} / ∏_{β>0} (1 - e^{-wβ})."""
        mu = tuple(int(m) for m in mu)
        if not self.is_dominant(mu):
            return self.alg.zero
        return self.half_modulus(mu) * self.whittaker_prefactor() * self.weyl_sum(mu)

    def whittaker_character(self, mu: Sequence[int]) -> RationalFn:
        """δ^{1/2} ∏(1 - q^{-1} e^{β}) E_μ with E_μ from the character oracle."""
        mu = tuple(int(m) for m in mu)
        if not self.is_dominant(mu):
            return self.alg.zero
        chi = RationalFn.from_poly(weyl_character(self.dual, mu))
        return self.half_modulus(mu) * self.whittaker_prefactor() * chi

    def weyl_sum(self, mu: Sequence[int]) -> RationalFn:
        """Σ_w e^{wμ} / ∏_{β>0} (1 - e^{-wβ})."""
        alg, rs = self.alg, self.dual
        total = alg.zero
        for w in self.W:
            inv = alg.product(alg.inv_binomial(rs.neg(w.act(b))) for b in rs.positive_roots)
            total = total + alg.e(w.act(mu)) * inv
        return total


def weyl_character(rs: RootSystem, mu: Sequence[int]) -> LaurentPoly:
    """Character of the irreducible representation with highest weight μ.

    Alternating sum Σ ε(w) e^{w(μ+ρ)} divided exactly by the Weyl denominator.
    """
    if any(m < 0 for m in mu):
        raise ValueError(f"μ = {tuple(mu)} is not dominant")
    shifted = tuple(m + r for m, r in zip(mu, rs.rho))
    num = LaurentPoly({}, rs.rank)
    den = LaurentPoly({}, rs.rank)
    for w in rs.weyl:
        sign = -1 if w.length % 2 else 1
        num = num + LaurentPoly.monomial(w.act(shifted), 0, sign)
        den = den + LaurentPoly.monomial(w.act(rs.rho), 0, sign)
    quotient = num.exact_divide(den)
    if quotient is None:
        raise ArithmeticError("Weyl denominator does not divide the alternating sum")
    return quotient


def weyl_dimension(rs: RootSystem, mu: Sequence[int]) -> Fraction:
    """∏_{β>0} ⟨μ+ρ, β^∨⟩ / ⟨ρ, β^∨⟩."""
    shifted = tuple(m + r for m, r in zip(mu, rs.rho))
    out = Fraction(1)
    for b in rs.positive_roots:
        out *= Fraction(rs.coroot_pairing(shifted, b)) / Fraction(rs.coroot_pairing(rs.rho, b))
    return out


def dominant_weights_up_to(ctx: PadicContext, height: Fraction) -> list[tuple[int, ...]]:
    """Dominant μ (in D's fundamental coordinates) with ⟨ρ_G, μ⟩ ≤ height."""
    rs = ctx.dual
    heights = [sum(rs.to_simple_coords(tuple(int(i == j) for j in range(rs.rank)))) for i in range(rs.rank)]
    out = []

    def rec(prefix: list[int], used: Fraction) -> None:
        i = len(prefix)
        if i == rs.rank:
            out.append(tuple(prefix))
            return
        m = 0
        while used + m * heights[i] <= height:
            rec(prefix + [m], used + m * heights[i])
            m += 1

    rec([], Fraction(0))
    return sorted(out, key=lambda mu: (sum(rs.to_simple_coords(mu)), mu))


def identity_matrix(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), Fraction(0)) for j in range(p)] for i in range(n)]


def evaluate_table(data: TransitionData, tau: CharacterAssignment) -> Matrix:
    W = data.alg.W
    return [[tau(data.entry(w, v)) for v in W] for w in W]
