#!/usr/bin/env python3
"""Independent oracles for the 4D grid, Laplacian stencils, curvature,
Chern quadratures, and parallel transport.

Conventions replicated from the geometry layer:
  - per-chart stereographic grids, cell-centered nodes at -L+(i+0.5)h,
    h = 2L/n, two charts per sphere;
  - partition of unity pou(|w|) = 1 - erf_step((ln|w|+a)/(2a)), a = ln 1.25,
    erf_step(t) = 0.5(1+erf(8(t-0.5)));
  - round metric ds^2 = 4|dw|^2/(1+|w|^2)^2  =>  Laplace-Beltrami
    Delta = (1+|w|^2)^2 d_w d_wbar = ((1+|w|^2)^2/4)(d_xx + d_yy);
  - FD-margin padding: resolution n covers [-1.3,1.3] with h = 2.6/n and a
    ring of s ghost cells is appended outside, so the chart grid has
    (n+2s)^2 nodes and extent L = 1.3(1 + 2 s / n); every node with
    |coord| <= 1.3 has a full width-s stencil.
"""
import math
import numpy as np

A_POU = math.log(1.25)


def erf_step(t):
    return 0.5 * (1.0 + math.erf(8.0 * (t - 0.5)))


def pou(r):
    if r <= 1e-300:
        return 1.0
    return 1.0 - erf_step((math.log(r) + A_POU) / (2 * A_POU))


def conformal(w):
    return 4.0 / (1.0 + abs(w) ** 2) ** 2


def zcoord(w):
    return (1.0 - abs(w) ** 2) / (1.0 + abs(w) ** 2)


def y1(w):  # Y_{1,0} up to normalization: z
    return zcoord(w)


def y2(w):  # Y_{2,0} up to normalization: (3z^2-1)/2
    z = zcoord(w)
    return 0.5 * (3 * z * z - 1.0)


def lap4(f, w, h):
    """Order-4 Laplace-Beltrami via per-axis 5-point second derivatives."""
    x, y = w.real, w.imag

    def fxx(g, x0, y0, hh):
        return (-g(complex(x0 + 2 * hh, y0)) + 16 * g(complex(x0 + hh, y0))
                - 30 * g(complex(x0, y0)) + 16 * g(complex(x0 - hh, y0))
                - g(complex(x0 - 2 * hh, y0))) / (12 * hh * hh)

    def fyy(g, x0, y0, hh):
        return (-g(complex(x0, y0 + 2 * hh)) + 16 * g(complex(x0, y0 + hh))
                - 30 * g(complex(x0, y0)) + 16 * g(complex(x0, y0 - hh))
                - g(complex(x0, y0 - 2 * hh))) / (12 * hh * hh)

    flat = fxx(f, x, y, h) + fyy(f, x, y, h)
    return ((1.0 + abs(w) ** 2) ** 2 / 4.0) * flat


def lap6(f, w, h):
    return (16.0 * lap4(f, w, h / 2) - lap4(f, w, h)) / 15.0


def lap8(f, w, h):
    return (64.0 * lap6(f, w, h / 2) - lap6(f, w, h)) / 63.0


def lap2(f, w, h):
    x, y = w.real, w.imag
    flat = (f(complex(x + h, y)) + f(complex(x - h, y)) + f(complex(x, y + h))
            + f(complex(x, y - h)) - 4 * f(complex(x, y))) / (h * h)
    return ((1.0 + abs(w) ** 2) ** 2 / 4.0) * flat


print("== A. spherical harmonics and callable Laplacian stencils ==")
w0 = complex(0.3, 0.2)
print("y1(0.3+0.2i) =", repr(y1(w0)))
print("y2(0.3+0.2i) =", repr(y2(w0)))
for name, lap, h in (("lap2 h=0.05", lap2, 0.05), ("lap4 h=0.1", lap4, 0.1),
                     ("lap6 h=0.2", lap6, 0.2), ("lap8 h=0.3", lap8, 0.3)):
    d1 = abs(lap(y1, w0, h) + 2.0 * y1(w0))
    d2 = abs(lap(y2, w0, h) + 6.0 * y2(w0))
    print(f"  {name}: |Dy1+2y1| = {d1:.3e}  |Dy2+6y2| = {d2:.3e}")

# wave defect of separable eigenfunction products at probe points
probes = [(complex(0.3, 0.2), complex(-0.5, 0.1)),
          (complex(0.0, 0.0), complex(0.7, -0.6)),
          (complex(-0.45, 0.7), complex(0.25, 0.15))]
print("-- wave defect (Dx - Dy) phi, phi = y1(w1) y1(w2) (exact 0) --")
for order, lap, h in (("6", lap6, 0.2), ("8", lap8, 0.3)):
    worst = 0.0
    for wa, wb in probes:
        dx = lap(lambda u: y1(u) * y1(wb), wa, h)
        dy = lap(lambda u: y1(wa) * y1(u), wb, h)
        worst = max(worst, abs(dx - dy))
    print(f"  order {order} h={h}: sup defect = {worst:.3e}")
print("-- phi = y1(w1) y2(w2): defect = 4 phi --")
wa, wb = probes[0]
dx = lap6(lambda u: y1(u) * y2(wb), wa, 0.2)
dy = lap6(lambda u: y1(wa) * y2(u), wb, 0.2)
print("  defect =", repr(dx - dy), " 4*phi =", repr(4 * y1(wa) * y2(wb)))

print()
print("== B. grid wave residual, materialized field, order-2 in-chart ==")


def sphere_nodes(n, L):
    """All 2n^2 nodes: (chart, iy, ix, w, pou*h^2, pou*conformal*h^2)."""
    h = 2 * L / n
    out = []
    for chart in (0, 1):
        for iy in range(n):
            for ix in range(n):
                w = complex(-L + (ix + 0.5) * h, -L + (iy + 0.5) * h)
                pw = pou(abs(w))
                out.append((chart, iy, ix, w, pw * h * h, pw * conformal(w) * h * h))
    return out, h


def global_scalar(fpoint, chart, w):
    """Sample a point-function given chart coordinates (chart 1: w is the
    stereographic coordinate; chart 2: the point's chart-1 coordinate is
    1/w). fpoint takes the chart-1 coordinate but must be chart-covariant;
    we pass z through zcoord which only needs |w| and the chart parity."""
    raise NotImplementedError


def wave_residual_grid(n, s=1):
    """phi = y1(x) y1(y); order-2 stencil; quadrature-weighted L2 of defect."""
    N = n + 2 * s
    L = 1.3 * (1.0 + 2.0 * s / n)
    nodes, h = sphere_nodes(N, L)
    nn = len(nodes)

    # sample y1 per chart: value at chart-c node w is z(w) on chart 1 and
    # -z(w) on chart 2 (since the chart-2 coordinate u maps to w = 1/u)
    def y1_chart(chart, w):
        return zcoord(w) if chart == 0 else -zcoord(w)

    vals = np.array([y1_chart(c, w) for (c, iy, ix, w, qf, qa) in nodes])
    idx = {}
    for k, (c, iy, ix, w, qf, qa) in enumerate(nodes):
        idx[(c, iy, ix)] = k

    def lap_at(k, n_):
        c, iy, ix, w, qf, qa = nodes[k]
        if not (1 <= iy < n_ - 1 and 1 <= ix < n_ - 1):
            return None
        flat = (vals[idx[(c, iy, ix + 1)]] + vals[idx[(c, iy, ix - 1)]]
                + vals[idx[(c, iy + 1, ix)]] + vals[idx[(c, iy - 1, ix)]]
                - 4 * vals[k]) / (h * h)
        return ((1 + abs(w) ** 2) ** 2 / 4.0) * flat

    # product grid: defect(n1, n2) = lap1[n1] * y1[n2] - y1[n1] * lap2[n2]
    lap_vals = np.array([lap_at(k, N) if lap_at(k, N) is not None else np.nan
                         for k in range(nn)])
    ok = ~np.isnan(lap_vals)
    qa = np.array([node[5] for node in nodes])
    # L2^2 = sum_{n1,n2 valid} qa1 qa2 (lap1 y1_2 - y1_1 lap2)^2; separable sums
    m_ok = ok
    A2 = np.sum(qa[m_ok] * lap_vals[m_ok] ** 2)       # int (Dy1)^2
    B2 = np.sum(qa[m_ok] * vals[m_ok] ** 2)           # int y1^2 over valid
    AB = np.sum(qa[m_ok] * lap_vals[m_ok] * vals[m_ok])
    l2sq = A2 * B2 - 2 * AB * AB + B2 * A2
    return math.sqrt(l2sq), math.sqrt(B2)


for n in (8, 12, 16, 24):
    r, nrm = wave_residual_grid(n)
    print(f"  n={n}: wave residual = {r:.12e}   (|y1|_L2 per factor = {nrm:.6f})")
r8 = wave_residual_grid(8)[0]
r16 = wave_residual_grid(16)[0]
print("  observed order 8->16:", math.log(r8 / r16) / math.log(2.0))

print()
print("== C. abelian closed-form curvature, c1 and c2 quadratures ==")
wp = complex(0.3, 0.2)
print("F_w1w1b(0.3+0.2i) = ", repr(-1.0 / (1 + abs(wp) ** 2) ** 2))


def c1_quadrature(n, L=1.3):
    nodes, h = sphere_nodes(n, L)
    s = 0.0
    for (c, iy, ix, w, qflat, qarea) in nodes:
        s += qflat * (-1.0 / (1 + abs(w) ** 2) ** 2)
    return s / math.pi


for n in (16, 32, 48, 64):
    v = c1_quadrature(n)
    print(f"  c1 at n={n}: {v!r}  (err {abs(v + 1):.3e})")
c1_32 = c1_quadrature(32)
print("  c2_total (separable product, = c1_1*c1_2) at n=32:", repr(c1_32 * c1_32))

print()
print("== D. parallel transport reference (path-ordered exponential) ==")
# dU/dt = -M(t) U, U(0) = I, over [0, 2pi],
# M(t) = i(0.4 cos t s1 + 0.3 sin 2t s2 + 0.2 s3)
s1 = np.array([[0, 1], [1, 0]], dtype=complex)
s2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
s3 = np.array([[1, 0], [0, -1]], dtype=complex)


def M(t):
    return 1j * (0.4 * math.cos(t) * s1 + 0.3 * math.sin(2 * t) * s2 + 0.2 * s3)


def rk4_transport(nsteps):
    U = np.eye(2, dtype=complex)
    hh = 2 * math.pi / nsteps
    t = 0.0
    for _ in range(nsteps):
        k1 = -M(t) @ U
        k2 = -M(t + hh / 2) @ (U + hh / 2 * k1)
        k3 = -M(t + hh / 2) @ (U + hh / 2 * k2)
        k4 = -M(t + hh) @ (U + hh * k3)
        U = U + hh / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        t += hh
    return U


Uref = rk4_transport(1 << 17)
Ucheck = rk4_transport(1 << 16)
print("  refinement agreement:", np.max(np.abs(Uref - Ucheck)))
print("  unitarity:", np.max(np.abs(Uref @ Uref.conj().T - np.eye(2))))
for r in Uref:
    print("   ", repr(r[0]), repr(r[1]))
U512 = rk4_transport(512)
print("  RK4 512-step deviation:", np.max(np.abs(U512 - Uref)))

# scalar constant case: A.gamma' = i*c, closed loop length 2pi
c = 0.35
print("  scalar: exp(-i c 2pi) =", repr(np.exp(-1j * c * 2 * math.pi)))

print()
print("== C2. c1/c2 quadratures on padded grids (ProductGrid(n, 2)) ==")


def c1_padded(n, s=2):
    return c1_quadrature(n + 2 * s, 1.3 * (1.0 + 2.0 * s / n))


for n in (12, 16, 24, 32):
    v = c1_padded(n)
    print(f"  c1 at n={n} (padded, margin 2): {v!r}  (err {abs(v + 1):.3e})")
c1m24 = c1_padded(24)
print("  c2 (product) at n=24, margin 2:", repr(c1m24 * c1m24))

print()
print("== C3. quadrature area totals (per sphere, vs 4*pi) ==")
for n, s in ((16, 2), (24, 2), (48, 2), (48, 1), (64, 2)):
    nodes, h = sphere_nodes(n + 2 * s, 1.3 * (1.0 + 2.0 * s / n))
    tot = sum(node[5] for node in nodes)
    print(f"  n={n} margin={s}: |area - 4pi| = {abs(tot - 4 * math.pi):.6e}")

print()
print("== E. exact L2 norm of 4*y1(x)y2(y) ==")
print("  16*pi/sqrt(15) =", repr(16 * math.pi / math.sqrt(15.0)))
