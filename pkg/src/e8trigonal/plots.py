"""Figure rendering for the report-producing CLI paths.

Figures are diagnostic companions to the exact output: the root-system
projection onto the Coxeter plane, and the real picture of a trigonal
curve over the fiber line with its branch points and marked fiber.
Matplotlib is imported lazily so the exact code paths never require it.
"""

from __future__ import annotations

from fractions import Fraction as Q


def _mpl():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def plot_root_projection(path: str) -> None:
    """Scatter the 240 roots projected onto the Coxeter plane."""
    import numpy as np

    from . import lie

    simples = np.array([[c / 2.0 for c in s] for s in lie._SIMPLE2])
    refl = []
    for a in simples:
        n = a @ a
        refl.append(np.eye(8) - 2.0 * np.outer(a, a) / n)
    cox = np.eye(8)
    for r in refl:
        cox = cox @ r
    eigvals, eigvecs = np.linalg.eig(cox)
    # rotation plane of the smallest positive rotation angle (2*pi/30)
    angles = np.angle(eigvals)
    idx = int(np.argmin(np.abs(angles - 2 * np.pi / 30)))
    v = eigvecs[:, idx]
    u1, u2 = np.real(v), np.imag(v)
    u1 /= np.linalg.norm(u1)
    u2 -= (u2 @ u1) * u1
    u2 /= np.linalg.norm(u2)
    roots = np.array([[c / 2.0 for c in r] for r in lie.bourbaki_roots()])
    xs, ys = roots @ u1, roots @ u2
    radii = np.hypot(xs, ys)

    plt = _mpl()
    fig, ax = plt.subplots(figsize=(7, 7))
    ax.scatter(xs, ys, c=radii, cmap="viridis", s=14, linewidths=0)
    ax.set_aspect("equal")
    ax.set_title("E8 roots in the Coxeter plane")
    ax.set_xticks([])
    ax.set_yticks([])
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def plot_trigonal_curve(curve, marked_fiber=None, path: str = "curve.png") -> None:
    """Real branches of w over the affine fiber coordinate x = s/t,
    with discriminant roots and the marked fiber highlighted."""
    import numpy as np

    from .curve import ramification_form

    plt = _mpl()
    disc = ramification_form(curve)
    # real roots of disc(x, 1)
    disc_x = np.polynomial.polynomial.Polynomial(
        [float(c) for c in reversed(disc.coeffs)]
    )
    real_roots = [r.real for r in disc_x.roots() if abs(r.imag) < 1e-9]

    span = 3.0
    if real_roots:
        span = max(3.0, 1.3 * max(abs(r) for r in real_roots))
    if marked_fiber is not None and marked_fiber[1] != 0:
        span = max(span, 1.3 * abs(float(Q(marked_fiber[0]) / Q(marked_fiber[1]))))
    xs = np.linspace(-span, span, 801)
    f0 = float(curve.f0)

    def form_at(form, x):
        # binary form at (x, 1): coefficients multiply descending powers
        d = form.degree
        return sum(float(c) * x ** (d - i) for i, c in enumerate(form.coeffs))

    fig, ax = plt.subplots(figsize=(8, 5))
    pts_x, pts_w = [], []
    for x in xs:
        roots = np.roots([f0, form_at(curve.f2, x), form_at(curve.f4, x),
                          form_at(curve.f6, x)])
        for r in roots:
            if abs(r.imag) < 1e-7:
                pts_x.append(x)
                pts_w.append(r.real)
    ax.plot(pts_x, pts_w, ".", markersize=2, color="tab:blue", label="curve")
    for r in real_roots:
        ax.axvline(r, color="tab:orange", alpha=0.4, linewidth=1)
    if marked_fiber is not None:
        s0, t0 = (Q(v) for v in marked_fiber)
        if t0 != 0:
            ax.axvline(float(s0 / t0), color="tab:red", linewidth=1.6,
                       label="marked fiber")
    ax.set_xlabel("s/t")
    ax.set_ylabel("w")
    ax.set_title("trigonal curve: real branches and branch fibers")
    ax.legend(loc="upper right", fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
