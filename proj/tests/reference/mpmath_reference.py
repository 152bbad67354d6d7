# Copyright 2026 The roundosc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference values frozen into the unit tests, computed with mpmath.

Run with `python3 mpmath_reference.py`; each line is `name = value`.
Everything here is computed from definitions (products, series, direct
lattice sums over the distribution function), never through the library.
"""

from mpmath import mp, mpf, mpc, gamma, psi, zeta, exp, log, pi, euler
from mpmath import fsum, fprod, diff, nsum, inf, expm1, sinh, quad

mp.dps = 50
LN2 = log(2)


def out(name, v):
  if isinstance(v, mpc):
    print(f"{name} = {mp.nstr(v.real, 20)} {mp.nstr(v.imag, 20)}")
  else:
    print(f"{name} = {mp.nstr(v, 20)}")


def eta(z, k_max=200):
  return fprod(1 - z / mpf(2)**k for k in range(1, k_max))


R = [(-1)**j / fprod([mpf(2)**k - 1 for k in range(1, j + 1)])
     for j in range(0, 150)]
Q = fsum(R)


def f_approx(x):
  return fsum(R[j] * exp(-mpf(2)**(j - x)) for j in range(150)) / Q


def psi_approx(t):
  return eta(exp(t)) / eta(1) * gamma(1 - t / LN2)


def psi_search(t):
  return exp(t) * eta(exp(t)) * gamma(1 - t / LN2) / (eta(1) * (1 + t / LN2))


def f_search(x):
  # sum_i R_i (1 - e^{-y})/y / Q, y = 2^{i+1-x}
  def term(y):
    return -expm1(-y) / y
  return fsum(R[i] * term(mpf(2)**(i + 1 - x)) for i in range(150)) / Q


def bernoulli_pmf(s, k_max=300):
  p = [mpf(1)]
  for k in range(1, k_max):
    q = exp(-s / mpf(2)**k)
    n = [mpf(0)] * (len(p) + 1)
    for i, v in enumerate(p):
      n[i] += v * q
      n[i + 1] += v * (1 - q)
    p = n
  return p


def f_patricia(x):
  total = mpf(0)
  for m in range(0, 80):
    u = mpf(2)**(m - 1 - x)
    if u > 3000:
      break
    total += bernoulli_pmf(u, 120)[m] * exp(-u)
  return total


def rounded_moment(cdf, m, alpha, lo, hi):
  return fsum((j + 1 - alpha)**m * (cdf(j + 1 - alpha) - cdf(j - alpha))
              for j in range(lo, hi))


def rounded_mgf(cdf, t, alpha, lo, hi):
  return fsum(exp(t * (j + 1 - alpha)) * (cdf(j + 1 - alpha) - cdf(j - alpha))
              for j in range(lo, hi))


def main():
  # special functions
  for name, z in [("gamma_a", mpc(0.3, 4.1)), ("gamma_b", mpc(-3.7, 12.5)),
                  ("gamma_c", mpc(2.5, -40)), ("gamma_d", mpc(-0.5, 40)),
                  ("gamma_e", mpc(1, 60)), ("gamma_f", mpc(-7.25, 0.5))]:
    out(name, gamma(z))
  out("loggamma_g", mp.loggamma(mpc(-20.5, 55)))
  out("trigamma_a", psi(1, mpc(0.5, 2)))
  out("digamma_a", psi(0, mpc(3, -1)))
  out("tetragamma_a", psi(2, mpc(1.5, 0.25)))
  out("eta_1", eta(1))
  out("eta_half", eta(mpf(0.5)))
  out("eta_1pi", eta(mpc(1, 1)))
  out("Q", Q)
  out("g0", fsum(log(1 + mpf(2)**-k) for k in range(1, 300)))
  out("g1", fsum((-1)**(j - 1) / (mpf(2)**j - 1) for j in range(1, 300)))
  out("g_c", fsum((-1)**(j - 1) * gamma(mpc(0.5, 1) + j) /
                  (gamma(j + 1) * (mpf(2)**j - 1)) for j in range(1, 400)))
  out("alpha_const", fsum(1 / (mpf(2)**n - 1) for n in range(1, 300)))
  out("zeta3", zeta(3))

  # catalog
  out("approx_psi_03", psi_approx(mpf(0.3)))
  out("approx_psi_c", psi_approx(mpc(0.2, 1.5)))
  out("search_psi_05", psi_search(mpf(0.5)))
  out("approx_ex", diff(psi_approx, 0))
  out("approx_ex2", diff(psi_approx, 0, 2))
  out("search_ex", diff(psi_search, 0))
  out("search_ex2", diff(psi_search, 0, 2))
  out("approx_cdf_0", f_approx(0))
  out("approx_cdf_25", f_approx(mpf(2.5)))
  out("approx_sf_8", 1 - f_approx(8))
  out("search_cdf_1", f_search(1))
  out("search_sf_6", 1 - f_search(6))
  out("patricia_cdf_05", f_patricia(mpf(0.5)))
  out("patricia_phi_lattice_1", gamma(1 - 2j * pi / LN2))

  # rounding engine, from direct lattice sums over F
  a = mpf(0.3)
  w = lambda t, phi: (exp(1j * t) - 1) / (1j * t) * phi(t)
  phi_g = lambda t: gamma(1 - 1j * t / LN2)
  beta1 = fsum(-1j * diff(lambda t: w(t, phi_g), 2 * pi * n) *
               exp(2j * pi * n * a) for n in range(-6, 7) if n != 0)
  out("gumbel_beta1_03", beta1.real)
  phi_a = lambda t: psi_approx(1j * t)
  beta2 = fsum(-diff(lambda t: w(t, phi_a), 2 * pi * n, 2) *
               exp(2j * pi * n * a) for n in range(-6, 7) if n != 0)
  out("approx_beta2_03", beta2.real)
  m1 = rounded_moment(f_approx, 1, a, -12, 40)
  m2 = rounded_moment(f_approx, 2, a, -12, 40)
  out("approx_mean_03", m1)
  out("approx_var_03", m2 - m1 * m1)
  out("approx_mgf_05_03", rounded_mgf(f_approx, mpf(0.5), a, -12, 40))
  gum = lambda x: exp(-exp(-x * LN2))
  out("gumbel_char_1_03", rounded_mgf(gum, 1j, a, -12, 120))

  # processes
  out("patricia_mean_3", fsum(1 - exp(-3 / mpf(2)**k) for k in range(1, 300)))
  p8 = bernoulli_pmf(mpf(8))
  for k in range(0, 6):
    out(f"patricia_pmf_8_{k}", p8[k])


if __name__ == "__main__":
  main()
