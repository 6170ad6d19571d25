#include "eigendamage/flatnorm.hpp"

#include <algorithm>
#include <cmath>

namespace eigendamage {

namespace {

// Concave piecewise-linear function on an interval, given by breakpoints.
struct ConcavePL {
    std::vector<double> xs;
    std::vector<double> vs;

    double lo() const { return xs.front(); }
    double hi() const { return xs.back(); }

    double eval(double x) const {
        if (x <= xs.front()) return vs.front();
        if (x >= xs.back()) return vs.back();
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        std::size_t j = static_cast<std::size_t>(it - xs.begin());
        const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
        return vs[j - 1] + t * (vs[j] - vs[j - 1]);
    }

    std::size_t argmax_index() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < xs.size(); ++i)
            if (vs[i] > vs[best]) best = i;
        return best;
    }

    void add_linear(double c) {
        for (std::size_t i = 0; i < xs.size(); ++i) vs[i] += c * xs[i];
    }

    // sup-convolution with the box [-d, d]: widen by d around the maximum
    void box_max(double d) {
        const std::size_t k = argmax_index();
        std::vector<double> nx, nv;
        nx.reserve(xs.size() + 2);
        nv.reserve(xs.size() + 2);
        for (std::size_t i = 0; i <= k; ++i) {
            nx.push_back(xs[i] - d);
            nv.push_back(vs[i]);
        }
        for (std::size_t i = k; i < xs.size(); ++i) {
            nx.push_back(xs[i] + d);
            nv.push_back(vs[i]);
        }
        xs.swap(nx);
        vs.swap(nv);
    }

    void clip(double l, double h) {
        const double nl = std::max(l, lo());
        const double nh = std::min(h, hi());
        std::vector<double> nx, nv;
        nx.push_back(nl);
        nv.push_back(eval(nl));
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (xs[i] > nl && xs[i] < nh) {
                nx.push_back(xs[i]);
                nv.push_back(vs[i]);
            }
        if (nh > nl) {
            nx.push_back(nh);
            nv.push_back(eval(nh));
        }
        xs.swap(nx);
        vs.swap(nv);
    }
};

struct Objective {
    std::vector<double> nodes;
    std::vector<double> coeffs;
};

Objective assemble_objective(const Measure1D& mu, int refine) {
    mu.validate();
    if (refine < 1)
        throw std::invalid_argument("flat_norm: refine must be >= 1");
    const Domain& dom = mu.domain;
    const double step = dom.h() / refine;
    const long m = static_cast<long>(dom.n) * refine;

    Objective obj;
    obj.nodes.reserve(m + 1 + mu.atoms.size());
    for (long j = 0; j <= m; ++j)
        obj.nodes.push_back(j == m ? dom.b : dom.a + j * step);
    for (const Atom& at : mu.atoms)
        obj.nodes.push_back(at.position);
    std::sort(obj.nodes.begin(), obj.nodes.end());
    obj.nodes.erase(std::unique(obj.nodes.begin(), obj.nodes.end()), obj.nodes.end());

    const std::size_t N = obj.nodes.size();
    obj.coeffs.assign(N, 0.0);
    const double h = dom.h();
    for (std::size_t i = 0; i + 1 < N; ++i) {
        const double len = obj.nodes[i + 1] - obj.nodes[i];
        const double mid = 0.5 * (obj.nodes[i] + obj.nodes[i + 1]);
        int cell = std::clamp(static_cast<int>((mid - dom.a) / h), 0, dom.n - 1);
        const double half = 0.5 * mu.density.cells[cell] * len;
        obj.coeffs[i] += half;
        obj.coeffs[i + 1] += half;
    }
    for (const Atom& at : mu.atoms) {
        auto it = std::lower_bound(obj.nodes.begin(), obj.nodes.end(), at.position);
        obj.coeffs[static_cast<std::size_t>(it - obj.nodes.begin())] += at.weight;
    }
    return obj;
}

// exact clamp of x into [l, h]
double clampd(double x, double l, double h) { return std::min(std::max(x, l), h); }

} // namespace

std::vector<double> flat_nodes(const Measure1D& mu, int refine) {
    return assemble_objective(mu, refine).nodes;
}

double flat_pairing(const Measure1D& mu, int refine, const std::vector<double>& phi) {
    Objective obj = assemble_objective(mu, refine);
    if (phi.size() != obj.nodes.size())
        throw std::invalid_argument("flat_pairing: witness size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) s += obj.coeffs[i] * phi[i];
    return s;
}

FlatNormResult flat_norm(const Measure1D& mu, int refine) {
    Objective obj = assemble_objective(mu, refine);
    const std::size_t N = obj.nodes.size();

    // compress runs of zero-coefficient interior nodes; the LP value is
    // unchanged since interior nodes of a run are unconstrained beyond the
    // accumulated Lipschitz budget
    std::vector<std::size_t> keep;
    keep.push_back(0);
    for (std::size_t i = 1; i + 1 < N; ++i)
        if (obj.coeffs[i] != 0.0) keep.push_back(i);
    if (N > 1) keep.push_back(N - 1);

    const std::size_t M = keep.size();
    std::vector<double> q(M), c(M);
    for (std::size_t k = 0; k < M; ++k) {
        q[k] = obj.nodes[keep[k]];
        c[k] = obj.coeffs[keep[k]];
    }

    // forward DP over concave PL value functions; per node we only need the
    // domain and one global maximizer for the backtrack
    std::vector<double> dom_lo(M), dom_hi(M), xstar(M);
    ConcavePL V{{0.0}, {0.0}};
    dom_lo[0] = dom_hi[0] = xstar[0] = 0.0;
    for (std::size_t k = 1; k < M; ++k) {
        V.box_max(q[k] - q[k - 1]);
        V.clip(-1.0, 1.0);
        V.add_linear(c[k]);
        dom_lo[k] = V.lo();
        dom_hi[k] = V.hi();
        xstar[k] = V.xs[V.argmax_index()];
    }

    // backtrack: phi_last = 0, then concavity makes the clamped maximizer optimal
    std::vector<double> cphi(M);
    cphi[M - 1] = 0.0;
    for (std::size_t k = M - 1; k-- > 0;) {
        const double d = q[k + 1] - q[k];
        double v = clampd(xstar[k], cphi[k + 1] - d, cphi[k + 1] + d);
        v = clampd(v, dom_lo[k], dom_hi[k]);
        cphi[k] = v;
    }

    // expand to the full grid by linear interpolation along compressed runs
    FlatNormResult res;
    res.nodes = obj.nodes;
    res.witness.assign(N, 0.0);
    for (std::size_t k = 0; k < M; ++k) res.witness[keep[k]] = cphi[k];
    for (std::size_t k = 0; k + 1 < M; ++k) {
        const std::size_t i0 = keep[k], i1 = keep[k + 1];
        if (i1 - i0 <= 1) continue;
        const double x0 = obj.nodes[i0], x1 = obj.nodes[i1];
        for (std::size_t i = i0 + 1; i < i1; ++i) {
            const double t = (obj.nodes[i] - x0) / (x1 - x0);
            res.witness[i] = cphi[k] + t * (cphi[k + 1] - cphi[k]);
        }
    }

    // make feasibility exact under floating point: clamp, then nudge by ulps
    // where a rounded bound still reads as violated
    res.witness[0] = 0.0;
    res.witness[N - 1] = 0.0;
    for (int sweep = 0; sweep < 3; ++sweep) {
        bool ok = true;
        for (std::size_t i = 1; i + 1 < N; ++i)
            res.witness[i] = clampd(res.witness[i], -1.0, 1.0);
        for (std::size_t i = 0; i + 1 < N; ++i) {
            const double d = obj.nodes[i + 1] - obj.nodes[i];
            double& l = res.witness[i];
            double& r = res.witness[i + 1];
            int guard = 0;
            while (std::fabs(r - l) > d && guard++ < 8) {
                ok = false;
                if (i + 2 == N || (i > 0 && std::fabs(l) > std::fabs(r)))
                    l = std::nextafter(l, r);
                else
                    r = std::nextafter(r, l);
            }
        }
        if (ok) break;
    }
    res.witness[0] = 0.0;
    res.witness[N - 1] = 0.0;

    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += obj.coeffs[i] * res.witness[i];
    res.value = s;
    return res;
}

double flat_distance(const Measure1D& mu, const Measure1D& nu, int refine) {
    return flat_norm(subtract(mu, nu), refine).value;
}

} // namespace eigendamage
