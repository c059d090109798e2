#include "signspec/signsym.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace signspec {

namespace {

std::string entry_name(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

SignPartition SignPartition::subset(int universe, std::set<int> members) {
    SignPartition p;
    p.universe_size = universe;
    for (int m : members)
        if (m < 0 || m >= universe) throw dimension_error("partition member out of universe");
    p.members = std::move(members);
    return p;
}

std::set<int> SignPartition::complement() const {
    std::set<int> c;
    for (int i = 0; i < universe_size; ++i)
        if (!members.count(i)) c.insert(i);
    return c;
}

bool SignPartition::matches(const std::set<int>& other) const {
    return members == other || complement() == other;
}

const char* to_string(SignDefect d) {
    switch (d) {
        case SignDefect::none: return "none";
        case SignDefect::zero_entry: return "zero entry";
        case SignDefect::sign_conflict: return "sign conflict";
        case SignDefect::negative_diagonal: return "negative diagonal";
    }
    return "?";
}

int sign_with_band(double x, double band) {
    if (std::abs(x) <= band) return 0;
    return x > 0.0 ? 1 : -1;
}

double default_zero_band(const Matrix& a) {
    return 1e-12 * a.max_abs();
}

namespace {

// Two-colors the constraint graph where a positive entry ties i,j to the
// same side and a negative entry forces a split. BFS from the smallest
// index of each component keeps that index out of the member set, which is
// the canonical representative.
SignDetection detect(const Matrix& a, double band, bool strict) {
    const int n = a.size();
    SignDetection out;

    for (int i = 0; i < n; ++i) {
        const int s = sign_with_band(a(i, i), band);
        if (s < 0) {
            out.defect = SignDefect::negative_diagonal;
            out.witness = "diagonal entry " + entry_name(i, i) + " is negative";
            return out;
        }
        if (strict && s == 0) {
            out.defect = SignDefect::zero_entry;
            out.witness = "entry " + entry_name(i, i) + " is zero";
            return out;
        }
    }
    if (strict) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (sign_with_band(a(i, j), band) == 0) {
                    out.defect = SignDefect::zero_entry;
                    out.witness = "entry " + entry_name(i, j) + " is zero";
                    return out;
                }
    }

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    int components = 0;

    auto cycle_witness = [&](int u, int v) {
        // Both endpoints are colored; walk both ancestor chains to the root
        // and splice out the closed odd walk u .. lca .. v, u.
        std::vector<int> up, vp;
        for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) up.push_back(x);
        for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) vp.push_back(x);
        while (up.size() > 1 && vp.size() > 1 && up[up.size() - 2] == vp[vp.size() - 2]) {
            up.pop_back();
            vp.pop_back();
        }
        std::vector<int> cycle(up.begin(), up.end());
        for (auto it = vp.rbegin(); it != vp.rend(); ++it)
            if (*it != cycle.back()) cycle.push_back(*it);
        out.conflict_cycle = cycle;
        std::string names;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            names += (k ? "," : "") + std::to_string(cycle[k] + 1);
        out.defect = SignDefect::sign_conflict;
        out.witness = "entries around indices {" + names + "} close an inconsistent constraint cycle";
    };

    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        ++components;
        color[static_cast<std::size_t>(start)] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v = 0; v < n; ++v) {
                if (v == u) continue;
                for (const double e : {a(u, v), a(v, u)}) {
                    const int s = sign_with_band(e, band);
                    if (s == 0) continue;
                    const int want = color[static_cast<std::size_t>(u)] ^ (s < 0 ? 1 : 0);
                    if (color[static_cast<std::size_t>(v)] == -1) {
                        color[static_cast<std::size_t>(v)] = want;
                        parent[static_cast<std::size_t>(v)] = u;
                        queue.push_back(v);
                    } else if (color[static_cast<std::size_t>(v)] != want) {
                        cycle_witness(u, v);
                        return out;
                    }
                }
            }
        }
    }

    SignPartition p;
    p.universe_size = n;
    p.strict = strict;
    p.components = components;
    p.unique_up_to_complement = components <= 1;
    p.alternatives_count = components >= 65 ? std::numeric_limits<unsigned long long>::max()
                                            : (components == 0 ? 1ull : 1ull << (components - 1));
    for (int i = 0; i < n; ++i)
        if (color[static_cast<std::size_t>(i)] == 1) p.members.insert(i);
    out.partition = std::move(p);
    return out;
}

}  // namespace

SignDetection detect_strict(const Matrix& a, double zero_band) {
    return detect(a, zero_band, true);
}

SignDetection detect_weak(const Matrix& a, double zero_band) {
    return detect(a, zero_band, false);
}

SignatureMatrix signature_from_partition(const SignPartition& j) {
    std::vector<int> signs(static_cast<std::size_t>(j.universe_size), 1);
    for (int m : j.members) signs[static_cast<std::size_t>(m)] = -1;
    return SignatureMatrix::from_signs(std::move(signs));
}

bool verify_partition(const Matrix& a, const SignPartition& j, bool strict, double zero_band) {
    if (a.size() != j.universe_size)
        throw dimension_error("partition universe does not match the matrix size");
    const int n = a.size();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int s = sign_with_band(a(r, c), zero_band);
            const bool split = j.split(r, c);
            if (strict) {
                if (s == 0) return false;
                if ((s < 0) != split) return false;
            } else {
                if (split && s > 0) return false;
                if (!split && s < 0) return false;
            }
        }
    return true;
}

}  // namespace signspec
