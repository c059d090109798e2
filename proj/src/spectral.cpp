#include "signspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

namespace signspec {

namespace {

using cd = std::complex<double>;

double& at(std::vector<double>& m, int n, int i, int j) {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
}

// Parlett-Reinsch balancing with radix-2 scaling; a diagonal similarity,
// so the spectrum is untouched.
void balance(std::vector<double>& m, int n) {
    constexpr double radix = 2.0, sq = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    c += std::abs(at(m, n, j, i));
                    r += std::abs(at(m, n, i, j));
                }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sq;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sq;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                g = 1.0 / f;
                for (int j = 0; j < n; ++j) at(m, n, i, j) *= g;
                for (int j = 0; j < n; ++j) at(m, n, j, i) *= f;
            }
        }
    }
}

// Householder reduction to upper Hessenberg form (orthogonal similarity).
void to_hessenberg(std::vector<double>& m, int n) {
    for (int k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i) scale += std::abs(at(m, n, i, k));
        if (scale == 0.0) continue;
        std::vector<double> v(static_cast<std::size_t>(n), 0.0);
        double h = 0.0;
        for (int i = k + 1; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = at(m, n, i, k) / scale;
            h += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        }
        const double x1 = v[static_cast<std::size_t>(k + 1)];
        const double g = x1 >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        h -= x1 * g;  // = |v|^2 / 2 after the update below
        v[static_cast<std::size_t>(k + 1)] = x1 - g;
        for (int j = 0; j < n; ++j) {  // rows: m := P m
            double f = 0.0;
            for (int i = k + 1; i < n; ++i) f += v[static_cast<std::size_t>(i)] * at(m, n, i, j);
            f /= h;
            for (int i = k + 1; i < n; ++i) at(m, n, i, j) -= f * v[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < n; ++i) {  // columns: m := m P
            double f = 0.0;
            for (int j = k + 1; j < n; ++j) f += at(m, n, i, j) * v[static_cast<std::size_t>(j)];
            f /= h;
            for (int j = k + 1; j < n; ++j) at(m, n, i, j) -= f * v[static_cast<std::size_t>(j)];
        }
        at(m, n, k + 1, k) = scale * g;
        for (int i = k + 2; i < n; ++i) at(m, n, i, k) = 0.0;
    }
}

// Double-shift QR with deflation on an upper Hessenberg matrix; eigenvalues
// only. Returns false when the global sweep budget runs out.
bool hessenberg_qr(std::vector<double>& hm, int n, std::vector<cd>& out, int sweep_cap) {
    auto h = [&](int i, int j) -> double& { return at(hm, n, i, j); };
    out.assign(static_cast<std::size_t>(n), cd{});
    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));
    if (anorm == 0.0) return true;

    int nn = n - 1;
    double t = 0.0;
    int sweeps = 0;
    while (nn >= 0) {
        int its = 0;
        for (;;) {
            int l;
            for (l = nn; l >= 1; --l) {
                double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(h(l, l - 1)) + s == s) {
                    h(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = h(nn, nn);
            if (l == nn) {  // one real eigenvalue isolated
                out[static_cast<std::size_t>(nn)] = cd{x + t, 0.0};
                --nn;
                break;
            }
            double y = h(nn - 1, nn - 1);
            double w = h(nn, nn - 1) * h(nn - 1, nn);
            if (l == nn - 1) {  // trailing 2x2 block isolated
                double p = 0.5 * (y - x);
                const double q = p * p + w;
                double z = std::sqrt(std::abs(q));
                x += t;
                if (q >= 0.0) {
                    z = p + (p >= 0.0 ? z : -z);
                    const double r1 = x + z;
                    const double r2 = z != 0.0 ? x - w / z : r1;
                    out[static_cast<std::size_t>(nn - 1)] = cd{r1, 0.0};
                    out[static_cast<std::size_t>(nn)] = cd{r2, 0.0};
                } else {
                    out[static_cast<std::size_t>(nn - 1)] = cd{x + p, z};
                    out[static_cast<std::size_t>(nn)] = cd{x + p, -z};
                }
                nn -= 2;
                break;
            }
            if (++sweeps > sweep_cap) return false;
            if (its == 10 || its == 20) {  // exceptional shift
                t += x;
                for (int i = 0; i <= nn; ++i) h(i, i) -= x;
                const double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
                y = x = 0.75 * s;
                w = -0.4375 * s * s;
            }
            ++its;
            int m;
            double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
            for (m = nn - 2; m >= l; --m) {
                z = h(m, m);
                const double rr = x - z;
                const double ss = y - z;
                p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - z - rr - ss;
                r = h(m + 2, m + 1);
                const double s = std::abs(p) + std::abs(q) + std::abs(r);
                p /= s;
                q /= s;
                r /= s;
                if (m == l) break;
                const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
                const double v = std::abs(p) *
                                 (std::abs(h(m - 1, m - 1)) + std::abs(z) + std::abs(h(m + 1, m + 1)));
                if (u + v == v) break;  // two consecutive small subdiagonals
            }
            for (int i = m + 2; i <= nn; ++i) {
                h(i, i - 2) = 0.0;
                if (i != m + 2) h(i, i - 3) = 0.0;
            }
            for (int k = m; k <= nn - 1; ++k) {  // double QR step on rows l..nn
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = k != nn - 1 ? h(k + 2, k - 1) : 0.0;
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x != 0.0) {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                const double mag = std::sqrt(p * p + q * q + r * r);
                const double s = p >= 0.0 ? mag : -mag;
                if (s == 0.0) continue;
                if (k == m) {
                    if (l != m) h(k, k - 1) = -h(k, k - 1);
                } else {
                    h(k, k - 1) = -s * x;
                }
                p += s;
                x = p / s;
                y = q / s;
                z = r / s;
                q /= p;
                r /= p;
                for (int j = k; j <= nn; ++j) {
                    p = h(k, j) + q * h(k + 1, j);
                    if (k != nn - 1) {
                        p += r * h(k + 2, j);
                        h(k + 2, j) -= p * z;
                    }
                    h(k + 1, j) -= p * y;
                    h(k, j) -= p * x;
                }
                const int mmin = nn < k + 3 ? nn : k + 3;
                for (int i = l; i <= mmin; ++i) {
                    p = x * h(i, k) + y * h(i, k + 1);
                    if (k != nn - 1) {
                        p += z * h(i, k + 2);
                        h(i, k + 2) -= p * r;
                    }
                    h(i, k + 1) -= p * q;
                    h(i, k) -= p;
                }
            }
        }
    }
    return true;
}

// Complex LU with partial pivoting; near-zero pivots are nudged so inverse
// iteration keeps a usable (huge but finite) solution.
class ComplexLu {
public:
    ComplexLu(std::vector<cd> m, int n, double pivot_floor) : n_(n), lu_(std::move(m)) {
        piv_.resize(static_cast<std::size_t>(n));
        std::iota(piv_.begin(), piv_.end(), 0);
        for (int k = 0; k < n_; ++k) {
            int best = k;
            double mag = std::abs(e(k, k));
            for (int i = k + 1; i < n_; ++i)
                if (std::abs(e(i, k)) > mag) {
                    mag = std::abs(e(i, k));
                    best = i;
                }
            if (best != k) {
                for (int j = 0; j < n_; ++j) std::swap(e(k, j), e(best, j));
                std::swap(piv_[static_cast<std::size_t>(k)], piv_[static_cast<std::size_t>(best)]);
            }
            if (std::abs(e(k, k)) < pivot_floor) e(k, k) = cd{pivot_floor, 0.0};
            for (int i = k + 1; i < n_; ++i) {
                e(i, k) /= e(k, k);
                const cd f = e(i, k);
                for (int j = k + 1; j < n_; ++j) e(i, j) -= f * e(k, j);
            }
        }
    }

    std::vector<cd> solve(const std::vector<cd>& b) const {
        std::vector<cd> x(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) x[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(piv_[static_cast<std::size_t>(i)])];
        for (int i = 1; i < n_; ++i)
            for (int k = 0; k < i; ++k) x[static_cast<std::size_t>(i)] -= c(i, k) * x[static_cast<std::size_t>(k)];
        for (int i = n_ - 1; i >= 0; --i) {
            for (int k = i + 1; k < n_; ++k) x[static_cast<std::size_t>(i)] -= c(i, k) * x[static_cast<std::size_t>(k)];
            x[static_cast<std::size_t>(i)] /= c(i, i);
        }
        return x;
    }

private:
    cd& e(int i, int j) { return lu_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    cd c(int i, int j) const { return lu_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }

    int n_;
    std::vector<cd> lu_;
    std::vector<int> piv_;
};

double vec_norm(const std::vector<cd>& v) {
    double s = 0.0;
    for (const cd& x : v) s += std::norm(x);
    return std::sqrt(s);
}

std::vector<cd> matvec(const Matrix& a, const std::vector<cd>& v) {
    const int n = a.size();
    std::vector<cd> r(static_cast<std::size_t>(n), cd{});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

// Inverse iteration for one eigenvalue; returns the best vector seen and
// its residual ||A v - lambda v||_2.
std::pair<std::vector<cd>, double> inverse_iteration(const Matrix& a, cd lambda) {
    const int n = a.size();
    const double scale = a.frobenius_norm() + std::abs(lambda);
    std::vector<cd> shifted(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            shifted[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                cd{a(i, j), 0.0} - (i == j ? lambda : cd{});
    const double floor = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon() * 1e-2;
    const ComplexLu lu(std::move(shifted), n, floor);

    std::vector<cd> v(static_cast<std::size_t>(n), cd{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
    std::vector<cd> best = v;
    double best_res = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 8; ++iter) {
        std::vector<cd> z = lu.solve(v);
        const double zn = vec_norm(z);
        if (!(zn > 0.0) || !std::isfinite(zn)) break;
        for (cd& x : z) x /= zn;
        v = std::move(z);
        std::vector<cd> av = matvec(a, v);
        double res = 0.0;
        for (int i = 0; i < n; ++i) res += std::norm(av[static_cast<std::size_t>(i)] - lambda * v[static_cast<std::size_t>(i)]);
        res = std::sqrt(res);
        if (res < best_res) {
            best_res = res;
            best = v;
        } else if (iter >= 2) {
            break;  // stalled
        }
        if (best_res <= 1e-15 * std::max(scale, 1.0)) break;
    }
    return {best, best_res};
}

constexpr double kTau = 2.0 * std::numbers::pi;

}  // namespace

double SpectralReport::max_residual() const {
    double m = 0.0;
    for (double r : residuals) m = std::max(m, r);
    return m;
}

SpectralReport eigenvalues(const Matrix& a, double residual_tol) {
    const int n = a.size();
    if (n < 1) throw dimension_error("eigenvalues require n >= 1");
    if (!a.all_finite()) throw precondition_error("matrix entries must be finite");

    SpectralReport rep;
    rep.norm = a.frobenius_norm();

    std::vector<cd> vals;
    if (n == 1) {
        vals.assign(1, cd{a(0, 0), 0.0});
    } else {
        std::vector<double> work(a.data());
        balance(work, n);
        to_hessenberg(work, n);
        rep.converged = hessenberg_qr(work, n, vals, 100 * n);
        if (!rep.converged) {
            // partial results: keep whatever the sweep produced, flagged invalid
            for (cd& v : vals)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) v = cd{};
        }
    }

    std::sort(vals.begin(), vals.end(), [](const cd& x, const cd& y) {
        const double ax = std::abs(x), ay = std::abs(y);
        if (ax != ay) return ax > ay;
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });

    rep.eigenvalues = vals;
    rep.rho = vals.empty() ? 0.0 : std::abs(vals.front());
    for (const cd& v : vals) {
        auto [vec, res] = inverse_iteration(a, v);
        rep.eigenvectors.push_back(std::move(vec));
        rep.residuals.push_back(res);
    }
    for (int i = 0; i < n; ++i)
        if (std::abs(rep.eigenvalues[static_cast<std::size_t>(i)]) >=
            rep.rho * (1.0 - kDefaultPeripheralTol))
            rep.peripheral.push_back(i);
    rep.residual_ok = rep.max_residual() <= residual_tol * std::max(1.0, rep.norm);
    return rep;
}

namespace {

// gcd of cycle lengths of the strongly connected |a| > tol digraph,
// computed from BFS levels: every edge (u,v) contributes |d(u)+1-d(v)|.
int cycle_gcd(const Matrix& a, double zero_tol) {
    const int n = a.size();
    std::vector<int> level(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{0};
    level[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const int u = queue[q];
        for (int v = 0; v < n; ++v)
            if (v != u && std::abs(a(u, v)) > zero_tol && level[static_cast<std::size_t>(v)] < 0) {
                level[static_cast<std::size_t>(v)] = level[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    int g = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (std::abs(a(u, v)) > zero_tol) {
                if (u == v) return 1;  // self-loop: aperiodic
                g = std::gcd(g, std::abs(level[static_cast<std::size_t>(u)] + 1 - level[static_cast<std::size_t>(v)]));
                if (g == 1) return 1;
            }
    return g == 0 ? 1 : g;
}

}  // namespace

double match_complex_multisets(std::vector<cd> xs, std::vector<cd> ys) {
    if (xs.size() != ys.size()) throw dimension_error("multiset sizes differ");
    double worst = 0.0;
    std::vector<char> used(ys.size(), 0);
    // repeatedly match the globally closest remaining pair
    for (std::size_t round = 0; round < xs.size(); ++round) {
        std::size_t bi = 0, bj = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = round; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j) {
                if (used[j]) continue;
                const double d = std::abs(xs[i] - ys[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        used[bj] = 1;
        std::swap(xs[round], xs[bi]);
        worst = std::max(worst, best);
    }
    return worst;
}

bool matches_root_ring(const std::vector<cd>& values, double modulus, int count, double tol) {
    if (static_cast<int>(values.size()) != count) return false;
    std::vector<cd> ring;
    ring.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double ang = kTau * k / count;
        ring.emplace_back(modulus * std::cos(ang), modulus * std::sin(ang));
    }
    return match_complex_multisets(values, ring) <= tol;
}

int imprimitivity_index(const Matrix& a, const SpectralReport& report, double zero_tol,
                        double peripheral_tol) {
    const int n = a.size();
    if (n < 1) throw dimension_error("imprimitivity index requires n >= 1");
    if (!is_irreducible(a, zero_tol))
        throw precondition_error("imprimitivity index requires an irreducible matrix");
    if (n == 1) return 1;
    const double rho = report.rho;
    if (!(rho > 0.0))
        throw precondition_error("imprimitivity index requires a positive spectral radius");

    int spectral = 0;
    std::vector<cd> peripheral;
    for (const cd& v : report.eigenvalues)
        if (std::abs(v) >= rho * (1.0 - peripheral_tol)) {
            ++spectral;
            peripheral.push_back(v);
        }
    const int graph = cycle_gcd(a, zero_tol);
    if (spectral != graph) {
        std::ostringstream msg;
        msg << "imprimitivity methods disagree: " << spectral << " peripheral eigenvalues vs cycle gcd "
            << graph;
        throw verification_error(msg.str());
    }
    const int h = graph;
    const double tol = rho * 1e-6;
    if (!matches_root_ring(peripheral, rho, h, tol))
        throw verification_error("peripheral eigenvalues do not form the expected root ring");
    // rotation invariance of the full spectrum
    std::vector<cd> rotated = report.eigenvalues;
    const cd w{std::cos(kTau / h), std::sin(kTau / h)};
    for (cd& v : rotated) v *= w;
    if (match_complex_multisets(report.eigenvalues, rotated) > tol)
        throw verification_error("spectrum is not invariant under the peripheral rotation");
    return h;
}

const char* to_string(SpectralCase c) {
    switch (c) {
        case SpectralCase::two_positive_leading: return "two_positive_leading";
        case SpectralCase::trident_h3: return "trident_h3";
        case SpectralCase::inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

std::string set_text(const SignPartition& p) {
    std::string s = "{";
    bool first = true;
    for (int m : p.members) {
        if (!first) s += ",";
        s += std::to_string(m + 1);
        first = false;
    }
    return s + "}";
}

// Gap-based simplicity proxy: the nearest other eigenvalue must sit at
// least `factor` residual bounds away.
bool is_simple(const SpectralReport& r, int idx, double factor = 1e3) {
    const cd v = r.eigenvalues[static_cast<std::size_t>(idx)];
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < static_cast<int>(r.eigenvalues.size()); ++j)
        if (j != idx) gap = std::min(gap, std::abs(v - r.eigenvalues[static_cast<std::size_t>(j)]));
    const double bound = std::max(r.residuals.empty() ? 0.0 : r.residuals[static_cast<std::size_t>(idx)],
                                  1e-14 * std::max(r.norm, 1.0));
    return gap > factor * bound;
}

}  // namespace

Classification classify(const Matrix& a, const ClassifyOptions& opts) {
    Classification out;
    std::string trace;
    const int n = a.size();
    const auto inapplicable = [&](const std::string& why) {
        out.kind = SpectralCase::inapplicable;
        trace += "inapplicable: " + why + "\n";
        out.witness = trace;
        return out;
    };

    if (n >= 1) out.spectrum = eigenvalues(a);
    if (n < 2) return inapplicable("dimension below 2 leaves no pair structure to analyze");
    if (!out.spectrum->converged) throw convergence_error("eigenvalue iteration did not converge");

    const SignDetection da = detect_weak(a, opts.input_zero_band);
    if (!da)
        return inapplicable(std::string("the matrix admits no sign partition (") + to_string(da.defect) +
                            ": " + da.witness + ")");
    out.j_a = da.partition;
    trace += "sign partition of the matrix: " + set_text(*da.partition) + "\n";

    const Matrix c = second_compound(a);
    const double band_c = default_zero_band(c);
    out.compound_spectrum = eigenvalues(c);
    if (!out.compound_spectrum->converged)
        throw convergence_error("compound eigenvalue iteration did not converge");

    const SignDetection dc = detect_weak(c, band_c);
    if (!dc)
        return inapplicable(std::string("the second compound admits no sign partition (") +
                            to_string(dc.defect) + ": " + dc.witness + ")");
    out.j_compound = dc.partition;
    trace += "sign partition of the second compound: " + set_text(*dc.partition) + "\n";

    const PairIndexer ix(n);
    out.order_relation = w_hat(*da.partition, *dc.partition, ix);
    const bool transitive = is_transitive(*out.order_relation);
    out.order_transitive = transitive;
    trace += std::string("combined pair relation is ") + (transitive ? "transitive" : "not transitive") +
             "\n";

    const bool ir_a = is_irreducible(a, opts.input_zero_band);
    const bool ir_c = is_irreducible(c, band_c);
    if (!ir_a)
        return inapplicable("the matrix is reducible, so the peripheral structure is not forced");
    if (!ir_c)
        return inapplicable("the second compound is reducible, so the peripheral structure is not forced");
    trace += "matrix and second compound are irreducible\n";

    const SpectralReport& ra = *out.spectrum;
    const SpectralReport& rc = *out.compound_spectrum;
    const int ha = imprimitivity_index(a, ra, opts.input_zero_band, opts.peripheral_tol);
    const int hc = imprimitivity_index(c, rc, band_c, opts.peripheral_tol);
    out.h_a = ha;
    out.h_compound = hc;
    out.spectrum->h = ha;
    out.compound_spectrum->h = hc;
    trace += "imprimitivity indices: matrix " + std::to_string(ha) + ", exterior square " +
             std::to_string(hc) + "\n";

    const double rho = ra.rho;
    const double tol = std::max(rho, 1e-300) * 1e-6;

    if (transitive) {
        out.order = permutation_from_w(*out.order_relation);
        if (ha != 1)
            throw verification_error("transitive case expects a single peripheral eigenvalue, found h=" +
                                     std::to_string(ha));
        const double l1 = rho;
        const double l2 = rc.rho / rho;
        const cd lead = ra.eigenvalues.front();
        if (std::abs(lead - cd{l1, 0.0}) > tol || !is_simple(ra, 0))
            throw verification_error("leading eigenvalue is not a simple positive real");
        // cross-check the derived second eigenvalue against the sorted spectrum
        if (hc == 1) {
            const cd second = ra.eigenvalues[1];
            if (std::abs(second - cd{l2, 0.0}) > tol || !is_simple(ra, 1))
                throw verification_error("second eigenvalue does not match the compound-derived value");
            if (!(l1 > l2) || !(l2 > 0.0))
                throw verification_error("leading eigenvalues are not ordered positive");
            trace += "two simple positive leading eigenvalues verified\n";
        } else {
            // ring of h eigenvalues of modulus l2 below the leading one
            if (1 + hc > n)
                throw verification_error("compound imprimitivity exceeds the available spectrum");
            std::vector<cd> ring(ra.eigenvalues.begin() + 1, ra.eigenvalues.begin() + 1 + hc);
            if (!matches_root_ring(ring, l2, hc, tol))
                throw verification_error("eigenvalues below the leading one do not form the expected ring");
            if (!(l1 > l2) || !(l2 > 0.0))
                throw verification_error("leading eigenvalues are not ordered positive");
            trace += "leading eigenvalue plus a ring of " + std::to_string(hc) +
                     " eigenvalues of equal modulus verified\n";
        }
        out.kind = SpectralCase::two_positive_leading;
        out.lambda1 = l1;
        out.lambda2 = l2;
        trace += "verdict: two positive simple leading eigenvalues\n";
        out.witness = trace;
        return out;
    }

    if (ha != 3 || hc != 3)
        throw verification_error("non-transitive case expects imprimitivity 3, found " +
                                 std::to_string(ha) + "/" + std::to_string(hc));
    std::vector<cd> peripheral;
    for (int idx = 0; idx < n; ++idx) {
        if (std::abs(ra.eigenvalues[static_cast<std::size_t>(idx)]) <
            rho * (1.0 - opts.peripheral_tol))
            continue;
        peripheral.push_back(ra.eigenvalues[static_cast<std::size_t>(idx)]);
        if (!is_simple(ra, idx)) throw verification_error("peripheral eigenvalue is not simple");
    }
    if (!matches_root_ring(peripheral, rho, 3, tol))
        throw verification_error("peripheral eigenvalues are not the cube-root triple");
    out.kind = SpectralCase::trident_h3;
    out.lambda1 = rho;
    trace += "verdict: three simple peripheral eigenvalues at the cube roots of the spectral radius cubed\n";
    out.witness = trace;
    return out;
}

SpectrumMatch check_pair_product_spectrum(const Matrix& a, const RelationSet& w, double tol) {
    SpectrumMatch out;
    const SpectralReport ra = eigenvalues(a);
    const Matrix b = w_matrix(a, w);
    const SpectralReport rb = eigenvalues(b);
    std::vector<cd> products;
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            products.push_back(ra.eigenvalues[static_cast<std::size_t>(i)] *
                               ra.eigenvalues[static_cast<std::size_t>(j)]);
    out.worst = match_complex_multisets(products, rb.eigenvalues);
    out.scale = std::max(ra.rho * ra.rho, std::numeric_limits<double>::min());
    out.ok = out.worst <= tol * out.scale;
    if (!out.ok) {
        std::ostringstream msg;
        msg << "worst pairing distance " << out.worst << " exceeds " << tol << " * " << out.scale;
        out.diagnostic = msg.str();
    }
    return out;
}

}  // namespace signspec
