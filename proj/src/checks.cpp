#include "cs/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>

#include "cs/mtc.hpp"
#include "cs/parafermion.hpp"
#include "cs/qfa.hpp"
#include "cs/quon.hpp"
#include "cs/reflection_positivity.hpp"
#include "cs/sweep.hpp"

namespace cs {

namespace {

std::vector<int> orders(const CheckOptions& opt, std::vector<int> defaults) {
    if (opt.d != 0) return {opt.d};
    return defaults;
}

double tol_or(const CheckOptions& opt, double def) {
    return opt.tol > 0 ? opt.tol : def;
}

int samples_or(const CheckOptions& opt, int def) {
    return opt.samples > 0 ? opt.samples : def;
}

Json order_list(const std::vector<int>& ds) {
    Json j = Json::array();
    for (int d : ds) j.push_back(d);
    return j;
}

bool sum_equal(const DiagramSum& a, const DiagramSum& b) {
    if (a.terms().size() != b.terms().size()) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        if (!a.terms()[i].same_shape(b.terms()[i])) return false;
        if (!(a.terms()[i].scalar() == b.terms()[i].scalar())) return false;
    }
    return true;
}

// Random non-crossing perfect matching of points lo..hi-1 in cyclic order.
void random_matching(std::mt19937_64& rng, int lo, int hi,
                     std::vector<std::pair<int, int>>& out) {
    if (lo >= hi) return;
    std::vector<int> cands;
    for (int p = lo + 1; p < hi; p += 2) cands.push_back(p);
    int m = cands[rng() % cands.size()];
    out.push_back({lo, m});
    random_matching(rng, lo + 1, m, out);
    random_matching(rng, m + 1, hi, out);
}

ChargedDiagram random_diagram(RingParams r, std::mt19937_64& rng, int maxHalf) {
    int half = 1 + static_cast<int>(rng() % maxHalf);
    int n = 2 * half;
    int b = static_cast<int>(rng() % (n + 1));
    if ((n - b) % 2 == 1) b = (b + 1) % (n + 1);
    std::vector<std::pair<int, int>> pairs;
    random_matching(rng, 0, n, pairs);
    int nev = static_cast<int>(rng() % 4);
    std::vector<ChargeEvent> ch;
    for (int i = 0; i < nev; ++i)
        ch.push_back({static_cast<int>(rng() % n),
                      1 + static_cast<int>(rng() % (r.d - 1))});
    return ChargedDiagram(r, n - b, b, pairs, ch, ExactScalar::one(r));
}

DiagramSum random_two_box_diagram(RingParams r, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pairs;
    if (rng() % 2 == 0)
        pairs = {{0, 1}, {2, 3}};
    else
        pairs = {{0, 3}, {1, 2}};
    std::vector<ChargeEvent> ch;
    int nev = static_cast<int>(rng() % 4);
    for (int i = 0; i < nev; ++i)
        ch.push_back({static_cast<int>(rng() % 4),
                      1 + static_cast<int>(rng() % (r.d - 1))});
    auto scalar = ExactScalar::zeta_pow(r, static_cast<long long>(
                                              rng() % (2 * r.d)));
    return DiagramSum(ChargedDiagram(r, 2, 2, pairs, ch, scalar));
}

TwoBox diag_box(int d, const Eigen::VectorXcd& f) {
    TwoBox a;
    a.d = d;
    a.entries = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) a.entries(k, k) = f(k);
    return a;
}

// A random element of the spin-model 2-box space (diagonal operator, i.e.
// a function on Z_d). The Fourier-analytic inequalities live on this
// space; charged matrix units are fixed shapes of the rotation on which
// the norm inequalities do not apply.
TwoBox random_diag_box(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd f(d);
    for (int k = 0; k < d; ++k) f(k) = Complex(gauss(rng), gauss(rng));
    return diag_box(d, f);
}

TwoBox random_psd_diag_box(int d, std::mt19937_64& rng) {
    Eigen::VectorXcd f(d);
    for (int k = 0; k < d; ++k) {
        double u = static_cast<double>(rng() % 1000000) / 1e6;
        f(k) = u * u;
    }
    return diag_box(d, f);
}

Eigen::VectorXcd randvec(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v;
}

Eigen::MatrixXcd randherm(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
    return (a + a.adjoint()) / 2.0;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

Eigen::MatrixXcd mat_pow(const Eigen::MatrixXcd& m, int e) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    for (int i = 0; i < e; ++i) out = out * m;
    return out;
}

double phase_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    Complex overlap = a.adjoint() * b;
    if (std::abs(overlap) < 1e-14) return (a - b).norm();
    Complex phase = overlap / std::abs(overlap);
    return (a * phase - b).norm();
}

// Transform of a 2-box through the precomputed rotation table (agrees with
// the per-call diagram path to machine precision; used inside sweeps for
// speed).
TwoBox table_sft(const RotationTable& rot, const TwoBox& a) {
    return apply_rotation_table(rot, a);
}

double hy_slack(const RotationTable& rot, const TwoBox& a, double p) {
    double q = (p == 1.0) ? std::numeric_limits<double>::infinity()
                          : p / (p - 1.0);
    double delta = std::sqrt(static_cast<double>(a.d));
    double lhs = p_norm(table_sft(rot, a), q);
    double rhs = std::pow(delta, 1.0 - 2.0 / p) * p_norm(a, p);
    return rhs - lhs;
}

double entropic_slack(const RotationTable& rot, const TwoBox& a) {
    auto sq = [](const TwoBox& x) {
        TwoBox y;
        y.d = x.d;
        y.entries = x.entries.adjoint() * x.entries;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(y.entries);
        y.entries = es.eigenvectors() *
                    es.eigenvalues().cwiseMax(0.0).asDiagonal() *
                    es.eigenvectors().adjoint();
        return y;
    };
    double n2sq = p_norm(a, 2.0);
    n2sq *= n2sq;
    double delta = std::sqrt(static_cast<double>(a.d));
    double lhs = von_neumann_entropy(sq(a)) +
                 von_neumann_entropy(sq(table_sft(rot, a)));
    double rhs = 2.0 * n2sq * std::log(delta) - 2.0 * n2sq * std::log(n2sq);
    return lhs - rhs;
}

// Random neutral (clock-diagonal) density matrix: diagonal in the charge
// basis, so it vanishes on every monomial of nonzero total grade.
Eigen::MatrixXcd random_neutral_density(int d, std::mt19937_64& rng) {
    Eigen::VectorXd diag(d);
    for (int k = 0; k < d; ++k)
        diag(k) = 0.05 + static_cast<double>(rng() % 1000000) / 1e6;
    diag /= diag.sum();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) rho(k, k) = diag(k);
    return rho;
}

// All ordered generator words of length <= cap (matching the library's
// invariance enumeration), realized as monomial matrices.
std::vector<MonomialMatrix> monomial_words(const ParafermionRep& rep,
                                           int cap) {
    int g = 2 * rep.n;
    long long dim = rep.c[0].dim;
    std::vector<MonomialMatrix> out = {
        MonomialMatrix::identity(rep.c[0].ring, dim)};
    std::vector<MonomialMatrix> frontier = out;
    for (int len = 1; len <= cap; ++len) {
        std::vector<MonomialMatrix> next;
        for (const auto& m : frontier)
            for (int i = 0; i < g; ++i) {
                next.push_back(m * rep.c[i]);
                out.push_back(next.back());
            }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

Json report_to_json(const CheckReport& r) {
    Json j;
    j["version"] = 1;
    j["checkId"] = r.checkId;
    j["statement"] = r.statement;
    j["params"] = r.params;
    j["metrics"] = r.metrics;
    j["pass"] = r.pass;
    return j;
}

std::string reports_to_lines(const std::vector<CheckReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += report_to_json(r).dump();
        out += '\n';
    }
    return out;
}

std::vector<CheckReport> check_engine(const CheckOptions& opt) {
    std::vector<CheckReport> out;
    auto ds = orders(opt, {2, 3, 4, 5, 6});
    int perOrder = samples_or(opt, 200);

    CheckReport sound;
    sound.checkId = "engine.soundness";
    sound.statement =
        "normalize is idempotent and reaches the same normal form under "
        "randomized rewrite orders, with exact scalar equality";
    sound.params = {{"orders", order_list(ds)},
                    {"samplesPerOrder", perOrder},
                    {"ordersPerDiagram", 10},
                    {"seed", opt.seed}};
    double maxBad = 0;
    long long total = 0;
    for (int d : ds) {
        auto r = make_ring(d);
        auto sweep = sweep_metrics(perOrder, [&](int i) -> double {
            std::mt19937_64 rng(split_seed(opt.seed + 1000ULL * d, i));
            auto a = DiagramSum(random_diagram(r, rng, 4));
            int bad = 0;
            auto n1 = normalize(a);
            if (!sum_equal(n1, normalize(n1))) ++bad;
            for (int order = 0; order < 10; ++order)
                if (!sum_equal(n1, normalize(a, rng()))) ++bad;
            return static_cast<double>(bad);
        });
        maxBad = std::max(maxBad, sweep.max);
        total += perOrder;
    }
    sound.metrics = {{"diagrams", total},
                     {"maxFailuresPerDiagram", maxBad}};
    sound.pass = maxBad == 0;
    out.push_back(std::move(sound));

    CheckReport loops;
    loops.checkId = "engine.loops";
    loops.statement =
        "a closed neutral loop evaluates to delta = sqrt(d) and a charged "
        "loop to zero, exactly";
    loops.params = {{"orders", order_list(ds)}};
    bool loopsOk = true;
    for (int d : ds) {
        auto r = make_ring(d);
        auto circle = [&](int k) {
            return compose_vertical(DiagramSum(cap(r, k)),
                                    DiagramSum(cup(r, 0)));
        };
        if (!(eval_closed(circle(0)) == ExactScalar::delta_pow(r, 1)))
            loopsOk = false;
        for (int k = 1; k < d; ++k)
            if (!eval_closed(circle(k)).is_zero()) loopsOk = false;
    }
    loops.metrics = {{"exact", loopsOk}};
    loops.pass = loopsOk;
    out.push_back(std::move(loops));
    return out;
}

std::vector<CheckReport> check_sft(const CheckOptions& opt) {
    std::vector<CheckReport> out;
    auto ds = orders(opt, {2, 3, 5, 8});
    double tol = tol_or(opt, 1e-10);

    CheckReport thm;
    thm.checkId = "sft.diagonal-theorem";
    thm.statement =
        "the string Fourier transform of each minimal diagonal projection "
        "equals its discrete Fourier expansion (1/sqrt(d)) sum_l q^{kl} P_l";
    thm.params = {{"orders", order_list(ds)}, {"tol", tol}};
    double worst = 0;
    for (int d : ds) {
        auto r = make_ring(d);
        Complex q = r.q();
        for (int k = 0; k < d; ++k) {
            TwoBox pk;
            pk.d = d;
            pk.entries = Eigen::MatrixXcd::Zero(d, d);
            pk.entries(k, k) = 1.0;
            auto s = sft_2box(pk);
            Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(d, d);
            for (int l = 0; l < d; ++l)
                expect(l, l) =
                    std::pow(q, k * l) / std::sqrt(static_cast<double>(d));
            worst = std::max(worst,
                             (s.entries - expect).cwiseAbs().maxCoeff());
        }
    }
    thm.metrics = {{"maxDeviation", worst}};
    thm.pass = worst <= tol;
    out.push_back(std::move(thm));

    CheckReport chain;
    chain.checkId = "sft.proof-chain";
    chain.statement =
        "the six rewrite equalities deriving the diagonal transform (bend "
        "charge, one click, identity resolution, para-isotopy, bend again, "
        "fuse and index shift) replay with exact scalars";
    chain.params = {{"orders", order_list(ds)}};
    long long chainFailures = 0;
    for (int d : ds) {
        auto r = make_ring(d);
        auto dinv = ExactScalar::delta_pow(r, -1);
        auto pshape = [&](std::vector<ChargeEvent> word) {
            for (auto& c : word) c.value = ((c.value % d) + d) % d;
            std::erase_if(word,
                          [](const ChargeEvent& c) { return c.value == 0; });
            return DiagramSum(ChargedDiagram(r, 2, 2, {{0, 1}, {2, 3}},
                                             std::move(word),
                                             ExactScalar::one(r)));
        };
        auto strands = [&](std::vector<ChargeEvent> word) {
            for (auto& c : word) c.value = ((c.value % d) + d) % d;
            std::erase_if(word,
                          [](const ChargeEvent& c) { return c.value == 0; });
            return DiagramSum(ChargedDiagram(r, 2, 2, {{0, 3}, {1, 2}},
                                             std::move(word),
                                             ExactScalar::one(r)));
        };
        for (int k = 1; k < d; ++k) {
            auto zk2 = ExactScalar::zeta_pow(r, 1LL * k * k);
            auto d1 = pshape({{1, k}, {2, -k}});
            auto d2 = pshape({{1, k}, {3, -k}});
            if (!sum_equal(normalize(d1), normalize(d2 * zk2)))
                ++chainFailures;
            auto s2 = strands({{0, k}, {1, -k}});
            if (!sum_equal(rotate_one_click(d2), normalize(s2)))
                ++chainFailures;
            auto insertedSum = [&](int l) {
                return pshape({{0, k}, {1, l}, {2, -l}, {2, -k}}) * dinv;
            };
            auto acc = insertedSum(0);
            for (int l = 1; l < d; ++l) acc = acc + insertedSum(l);
            if (!sum_equal(expand_identity(s2, 0), normalize(acc)))
                ++chainFailures;
            for (int l = 0; l < d; ++l) {
                auto lhs = pshape({{0, k}, {1, l}, {2, -l}, {2, -k}});
                auto rhs = pshape({{1, l}, {0, k}, {2, -l}, {2, -k}}) *
                           ExactScalar::q_pow(r, 1LL * k * l);
                if (!sum_equal(normalize(lhs), normalize(rhs)))
                    ++chainFailures;
            }
            for (int l = 0; l < d; ++l) {
                auto lhs = pshape({{1, l}, {0, k}, {2, -l}, {2, -k}});
                auto rhs = pshape({{1, l}, {1, k}, {2, -l}, {2, -k}}) * zk2;
                if (!sum_equal(normalize(lhs), normalize(rhs)))
                    ++chainFailures;
            }
            DiagramSum accL = pshape({{1, 0}, {1, k}, {2, 0}, {2, -k}}) *
                              ExactScalar::q_pow(r, 1LL * k * k);
            for (int l = 1; l < d; ++l)
                accL = accL + pshape({{1, l}, {1, k}, {2, -l}, {2, -k}}) *
                                  ExactScalar::q_pow(r, 1LL * k * (k + l));
            DiagramSum accR = pshape({{1, 0}, {2, 0}});
            for (int l = 1; l < d; ++l)
                accR = accR + pshape({{1, l}, {2, -l}}) *
                                  ExactScalar::q_pow(r, 1LL * k * l);
            if (!sum_equal(normalize(accL), normalize(accR)))
                ++chainFailures;
        }
    }
    chain.metrics = {{"failures", chainFailures}};
    chain.pass = chainFailures == 0;
    out.push_back(std::move(chain));
    return out;
}

std::vector<CheckReport> check_gates(const CheckOptions& opt) {
    std::vector<CheckReport> out;
    auto ds = orders(opt, {2, 3, 4, 5, 6, 7, 8, 9});
    int pairs = samples_or(opt, 200);
    double tolHom = tol_or(opt, 1e-10);
    double tolPauli = tol_or(opt, 1e-12);

    CheckReport dict;
    dict.checkId = "gates.dictionary";
    dict.statement =
        "the diagram-to-matrix dictionary is a *-homomorphism: vertical "
        "composition maps to matrix product and vertical reflection to the "
        "adjoint";
    dict.params = {{"orders", order_list(ds)},
                   {"pairsPerOrder", pairs},
                   {"seed", opt.seed},
                   {"tol", tolHom}};
    double worstHom = 0;
    for (int d : ds) {
        auto r = make_ring(d);
        auto sweep = sweep_metrics(pairs, [&](int i) -> double {
            std::mt19937_64 rng(split_seed(opt.seed + 2000ULL * d, i));
            auto da = random_two_box_diagram(r, rng);
            auto db = random_two_box_diagram(r, rng);
            auto ma = diagram_to_matrix(da).entries;
            auto mb = diagram_to_matrix(db).entries;
            auto comp = diagram_to_matrix(compose_vertical(da, db)).entries;
            double dev = (comp - mb * ma).norm();
            auto adj = diagram_to_matrix(adjoint(da)).entries;
            dev = std::max(dev, (adj - ma.adjoint().eval()).norm());
            return dev;
        });
        worstHom = std::max(worstHom, sweep.max);
    }
    dict.metrics = {{"maxDeviation", worstHom}};
    dict.pass = worstHom <= tolHom;
    out.push_back(std::move(dict));

    CheckReport pauli;
    pauli.checkId = "gates.pauli";
    pauli.statement =
        "the pictured Pauli transformations satisfy X^d = Z^d = I and "
        "ZX = qXZ, and the minimal projections resolve the identity exactly";
    pauli.params = {{"orders", order_list(ds)}, {"tol", tolPauli}};
    double worstPauli = 0;
    bool resolutionExact = true;
    for (int d : ds) {
        auto r = make_ring(d);
        Complex q = r.q();
        auto p = pauli_pictures(r);
        auto id = Eigen::MatrixXcd::Identity(d, d);
        auto X = diagram_to_matrix(p.x).entries;
        auto Z = diagram_to_matrix(p.z).entries;
        worstPauli = std::max(worstPauli, (mat_pow(X, d) - id).norm());
        worstPauli = std::max(worstPauli, (mat_pow(Z, d) - id).norm());
        worstPauli = std::max(worstPauli, (Z * X - q * X * Z).norm());
        // Exact resolution of the identity, entrywise and as the rewrite
        // engine's own identity expansion.
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                ExactScalar s = ExactScalar::zero(r);
                for (int m = 0; m < d; ++m)
                    s = s + matrix_entry_exact(projection_diagram(r, m), j, k);
                if (j == k ? !(s == ExactScalar::one(r)) : !s.is_zero())
                    resolutionExact = false;
            }
        DiagramSum acc = projection_diagram(r, 0);
        for (int k = 1; k < d; ++k) acc = acc + projection_diagram(r, k);
        if (!sum_equal(
                expand_identity(DiagramSum(identity_diagram(r, 2)), 0),
                normalize(acc)))
            resolutionExact = false;
    }
    pauli.metrics = {{"maxDeviation", worstPauli},
                     {"identityResolutionExact", resolutionExact}};
    pauli.pass = worstPauli <= tolPauli && resolutionExact;
    out.push_back(std::move(pauli));
    return out;
}

std::vector<CheckReport> check_qfa(const CheckOptions& opt,
                                   const std::string& which) {
    std::vector<CheckReport> out;
    auto ds = orders(opt, {2, 3, 4, 5, 6});
    const std::vector<double> ps = {1.0, 1.2, 1.5, 1.8, 2.0};
    bool all = which == "all";

    if (all || which == "hy") {
        int n = samples_or(opt, 500);
        double tol = tol_or(opt, 1e-8);
        CheckReport hy;
        hy.checkId = "qfa.hausdorff-young";
        hy.statement =
            "the transform-to-box norm inequality ||F_s(A)||_q <= "
            "delta^(1-2/p) ||A||_p holds on random spin-model (diagonal) "
            "2-boxes for 1 <= p <= 2";
        hy.params = {{"orders", order_list(ds)},
                     {"samplesPerOrder", n},
                     {"pValues", Json::array({1.0, 1.2, 1.5, 1.8, 2.0})},
                     {"seed", opt.seed},
                     {"tol", tol}};
        double minSlack = 0;
        for (int d : ds) {
            auto rot = make_rotation_table(make_ring(d));
            auto sweep = sweep_metrics(n, [&](int i) -> double {
                std::mt19937_64 rng(split_seed(opt.seed + 3000ULL * d, i));
                auto a = random_diag_box(d, rng);
                double s = std::numeric_limits<double>::infinity();
                for (double p : ps) s = std::min(s, hy_slack(rot, a, p));
                return s;
            });
            minSlack = std::min(minSlack, sweep.min);
        }
        hy.metrics = {{"minSlack", minSlack}};
        hy.pass = minSlack >= -tol;
        out.push_back(std::move(hy));

        CheckReport ext;
        ext.checkId = "qfa.bishift-extremizers";
        ext.statement =
            "every translated, character-modulated subgroup biprojection "
            "achieves equality in the norm inequality at every tested p";
        ext.params = {{"orders", order_list(ds)},
                      {"pValues", Json::array({1.0, 1.2, 1.5, 1.8, 2.0})},
                      {"tol", tol}};
        double worstAbs = 0;
        long long shifts = 0;
        for (int d : ds) {
            auto r = make_ring(d);
            auto rot = make_rotation_table(r);
            for (int gen = 0; gen < d; ++gen) {
                if (gen != 0 && d % gen != 0) continue;
                auto b = biprojection(r, gen);
                for (int g = 0; g < d; ++g)
                    for (int chi = 0; chi < d; ++chi) {
                        auto sh = bi_shift(b, g, chi);
                        for (double p : ps)
                            worstAbs = std::max(
                                worstAbs, std::abs(hy_slack(rot, sh, p)));
                        ++shifts;
                    }
            }
        }
        ext.metrics = {{"maxAbsSlack", worstAbs}, {"biShiftsTested", shifts}};
        ext.pass = worstAbs <= tol;
        out.push_back(std::move(ext));
    }

    if (all || which == "schur") {
        int n = samples_or(opt, 500);
        double tol = tol_or(opt, 1e-9);
        CheckReport schur;
        schur.checkId = "qfa.schur";
        schur.statement =
            "the convolution of two positive spin-model 2-boxes is positive "
            "(min eigenvalue of the hermitian part non-negative)";
        schur.params = {{"orders", order_list(ds)},
                        {"pairsPerOrder", n},
                        {"seed", opt.seed},
                        {"tol", tol}};
        double minEig = 0;
        long long violations = 0;
        for (int d : ds) {
            auto sweep = sweep_metrics(n, [&](int i) -> double {
                std::mt19937_64 rng(split_seed(opt.seed + 4000ULL * d, i));
                auto a = random_psd_diag_box(d, rng);
                auto b = random_psd_diag_box(d, rng);
                auto [eig, pass] = schur_positivity_check(a, b);
                return eig;
            });
            minEig = std::min(minEig, sweep.min);
            if (sweep.min < -tol) ++violations;
        }
        schur.metrics = {{"minEigenvalue", minEig},
                         {"violations", violations}};
        schur.pass = violations == 0 && minEig >= -tol;
        out.push_back(std::move(schur));
    }

    if (all || which == "entropy") {
        int n = samples_or(opt, 50);
        double tol = tol_or(opt, 1e-4);
        CheckReport renyi;
        renyi.checkId = "qfa.renyi-limit";
        renyi.statement =
            "the Renyi entropy at p = 1 + 1e-5 agrees with the von Neumann "
            "entropy on trace-normalized positive 2-boxes";
        renyi.params = {{"orders", order_list(ds)},
                        {"samplesPerOrder", n},
                        {"seed", opt.seed},
                        {"tol", tol}};
        double worst = 0;
        for (int d : ds) {
            auto sweep = sweep_metrics(n, [&](int i) -> double {
                std::mt19937_64 rng(split_seed(opt.seed + 5000ULL * d, i));
                auto a = random_psd_diag_box(d, rng);
                a.entries /= planar_trace(a).real();
                return std::abs(renyi_entropy(a, 1.0 + 1e-5) -
                                von_neumann_entropy(a));
            });
            worst = std::max(worst, sweep.max);
        }
        renyi.metrics = {{"maxDeviation", worst}};
        renyi.pass = worst <= tol;
        out.push_back(std::move(renyi));
    }

    if (all || which == "uncertainty") {
        int n = samples_or(opt, 500);
        double tol = tol_or(opt, 1e-8);
        CheckReport up;
        up.checkId = "qfa.entropic-uncertainty";
        up.statement =
            "the entropies of |A|^2 and |F_s(A)|^2 sum to at least "
            "2||A||_2^2 (log delta - log ||A||_2^2) on random spin-model "
            "2-boxes";
        up.params = {{"orders", order_list(ds)},
                     {"samplesPerOrder", n},
                     {"seed", opt.seed},
                     {"tol", tol}};
        double minSlack = 0;
        for (int d : ds) {
            auto rot = make_rotation_table(make_ring(d));
            auto sweep = sweep_metrics(n, [&](int i) -> double {
                std::mt19937_64 rng(split_seed(opt.seed + 6000ULL * d, i));
                return entropic_slack(rot, random_diag_box(d, rng));
            });
            minSlack = std::min(minSlack, sweep.min);
        }
        up.metrics = {{"minSlack", minSlack}};
        up.pass = minSlack >= -tol;
        out.push_back(std::move(up));

        double tolPair = tol_or(opt, 1e-10);
        CheckReport pair;
        pair.checkId = "qfa.minimal-maximal-pair";
        pair.statement =
            "the zero-state box and its transform are a Fourier-dual pair "
            "with entropies exactly 0 and log d, saturating the entropic "
            "bound";
        pair.params = {{"orders", order_list(ds)}, {"tol", tolPair}};
        double worst = 0;
        bool pass = true;
        for (int d : ds) {
            auto rep = minimal_maximal_pair_check(d);
            worst = std::max(worst, std::abs(rep.zeroEntropy));
            worst = std::max(
                worst, std::abs(rep.bellEntropy -
                                std::log(static_cast<double>(d))));
            if (!rep.pass) pass = false;
            if (rep.entropicSum < rep.entropicBound - 1e-9) pass = false;
        }
        pair.metrics = {{"maxEntropyDeviation", worst}};
        pair.pass = pass && worst <= tolPair;
        out.push_back(std::move(pair));
    }
    return out;
}

std::vector<CheckReport> check_rp(const CheckOptions& opt) {
    std::vector<CheckReport> out;
    auto ds = orders(opt, {2, 3});
    const std::vector<double> betas = {0.1, 1.0, 10.0};
    double tol = tol_or(opt, 1e-9);

    {
        int n = samples_or(opt, 100);
        CheckReport cert;
        cert.checkId = "rp.certificates";
        cert.statement =
            "pullback-constructed Hamiltonians are certified reflection "
            "positive: the transform of exp(-beta H) is positive and the "
            "diagonal reflection pairing is real non-negative";
        cert.params = {{"orders", order_list(ds)},
                       {"hamiltoniansPerOrder", n},
                       {"betas", Json::array({0.1, 1.0, 10.0})},
                       {"vectorSamples", 100},
                       {"seed", opt.seed},
                       {"tol", tol}};
        double minMargin = 0;
        long long certified = 0;
        for (int d : ds) {
            auto sweep = sweep_metrics(n, [&](int i) -> double {
                auto h = pullback_hamiltonian(
                    d, split_seed(opt.seed + 7000ULL * d, i));
                h.entries /= (1.0 + h.entries.norm());
                auto c = rp_certificate(h, betas, 100,
                                        split_seed(opt.seed + 7100ULL * d, i));
                double worst = 0;
                for (auto& b : c.betas) {
                    worst = std::min(worst, b.expMinEigenvalue);
                    worst = std::min(worst, b.pairingMinReal);
                    worst = std::min(worst, -b.identityMaxError);
                }
                return c.certified ? worst
                                   : -std::numeric_limits<double>::infinity();
            });
            minMargin = std::min(minMargin, sweep.min);
            if (sweep.min > -std::numeric_limits<double>::infinity())
                certified += n;
        }
        cert.metrics = {{"minCertificateMargin", minMargin},
                        {"certified", certified}};
        cert.pass = minMargin >= -tol;
        out.push_back(std::move(cert));
    }

    {
        int n = samples_or(opt, 1000);
        CheckReport ident;
        ident.checkId = "rp.pairing-identity";
        ident.statement =
            "the reflection pairing of exp(-beta H) equals the quadratic "
            "form of its bipartite transform on the rearranged vector, for "
            "random self-adjoint H and random vectors";
        ident.params = {{"triples", n}, {"seed", opt.seed}, {"tol", tol}};
        auto sweep = sweep_metrics(n, [&](int i) -> double {
            std::mt19937_64 rng(split_seed(opt.seed + 7500ULL, i));
            int d = 2 + static_cast<int>(rng() % 4);
            BipartiteOperator h;
            h.d = d;
            h.entries = randherm(d * d, rng);
            h.entries /= (1.0 + h.entries.norm());
            auto v = randvec(d, rng);
            auto w = randvec(d, rng);
            double beta = 0.5 + 0.01 * static_cast<double>(i % 100);
            auto eh = bipartite_exp(h, beta);
            auto seh = sft_bipartite(eh);
            Complex lhs = rp_pairing(v, w, h, beta);
            Eigen::VectorXcd mixed(d * d);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    mixed(a * d + b) = v(a) * std::conj(w(b));
            Complex rhs = mixed.adjoint() * (seh.entries * mixed).eval();
            return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
        });
        ident.metrics = {{"maxRelativeError", sweep.max}};
        ident.pass = sweep.max <= tol;
        out.push_back(std::move(ident));
    }

    {
        int n = samples_or(opt, 50);
        CheckReport dec;
        dec.checkId = "rp.decomposed";
        dec.statement =
            "Hamiltonians assembled as a reflected one-sided part plus a "
            "coupling with positive transform are certified reflection "
            "positive";
        dec.params = {{"d", 2},
                      {"instances", n},
                      {"betas", Json::array({0.1, 1.0})},
                      {"seed", opt.seed},
                      {"tol", tol}};
        const std::vector<double> decBetas = {0.1, 1.0};
        auto sweep = sweep_metrics(n, [&](int i) -> double {
            std::mt19937_64 rng(split_seed(opt.seed + 7700ULL, i));
            int d = 2;
            Eigen::MatrixXcd hm = randherm(d, rng);
            auto h0 = pullback_hamiltonian(
                d, split_seed(opt.seed + 7800ULL, i));
            h0.entries /= (1.0 + h0.entries.norm());
            auto c = decomposed_rp_check(hm, h0, decBetas, 10,
                                         split_seed(opt.seed + 7900ULL, i));
            if (!c.certified) return -std::numeric_limits<double>::infinity();
            double worst = 0;
            for (auto& b : c.betas) worst = std::min(worst, b.pairingMinReal);
            return worst;
        });
        dec.metrics = {{"minPairingReal", sweep.min}};
        dec.pass = sweep.min >= -tol;
        out.push_back(std::move(dec));
    }
    return out;
}

std::vector<CheckReport> check_states(const CheckOptions& opt) {
    std::vector<CheckReport> out;
    auto ds = orders(opt, {2, 3, 5, 7});
    double tolAlg = tol_or(opt, 1e-12);
    double tolState = tol_or(opt, 1e-10);

    CheckReport quon;
    quon.checkId = "states.quon";
    quon.statement =
        "the four-string qudit has a rank-d physical subspace on which "
        "XYZ = zeta, with the grading operator commuting with X, Y, Z";
    quon.params = {{"orders", order_list(ds)}, {"tol", tolAlg}};
    double worstAlg = 0;
    bool ranks = true;
    for (int d : ds) {
        auto r = make_ring(d);
        Complex zeta = ExactScalar::zeta_pow(r, 1).to_complex();
        auto p = quon_paulis(d);
        Eigen::MatrixXcd proj;
        try {
            proj = neutral_projector(d);
        } catch (const std::logic_error&) {
            ranks = false;
            continue;
        }
        if (std::abs(proj.trace().real() - d) > 1e-8) ranks = false;
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d * d, d * d);
        worstAlg = std::max(
            worstAlg, ((p.x * p.y * p.z - zeta * id) * proj).norm());
        worstAlg = std::max(worstAlg, (p.gamma * p.x - p.x * p.gamma).norm());
        worstAlg = std::max(worstAlg, (p.gamma * p.y - p.y * p.gamma).norm());
        worstAlg = std::max(worstAlg, (p.gamma * p.z - p.z * p.gamma).norm());
    }
    quon.metrics = {{"maxDeviation", worstAlg}, {"ranksExact", ranks}};
    quon.pass = ranks && worstAlg <= tolAlg;
    out.push_back(std::move(quon));

    CheckReport ghz;
    ghz.checkId = "states.ghz-max";
    ghz.statement =
        "the two three-party contractions match their closed forms up to a "
        "global phase, are exchanged by the per-qudit Fourier transform, "
        "and have maximally mixed single-qudit reductions";
    ghz.params = {{"orders", order_list(ds)}, {"tol", tolState}};
    double worstState = 0;
    for (int d : ds) {
        auto g = ghz_state(d);
        auto m = max_state(d);
        Eigen::VectorXcd ghzClosed = Eigen::VectorXcd::Zero(d * d * d);
        for (int k = 0; k < d; ++k)
            ghzClosed(k * d * d + k * d + k) =
                1.0 / std::sqrt(static_cast<double>(d));
        worstState =
            std::max(worstState, phase_distance(g.amplitudes, ghzClosed));
        Eigen::VectorXcd maxClosed = Eigen::VectorXcd::Zero(d * d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                int c = ((-(a + b)) % d + d) % d;
                maxClosed(a * d * d + b * d + c) = 1.0 / d;
            }
        worstState =
            std::max(worstState, phase_distance(m.amplitudes, maxClosed));
        Eigen::MatrixXcd f = dft_matrix(d).entries;
        Eigen::VectorXcd img = kron(kron(f, f), f) * g.amplitudes;
        worstState = std::max(worstState, phase_distance(m.amplitudes, img));
        for (int site = 0; site < 3; ++site) {
            Eigen::MatrixXcd idOverD =
                Eigen::MatrixXcd::Identity(d, d) / d;
            worstState = std::max(
                worstState, (reduced_density(g, {site}) - idOverD).norm());
            worstState = std::max(
                worstState, (reduced_density(m, {site}) - idOverD).norm());
        }
    }
    ghz.metrics = {{"maxDeviation", worstState}};
    ghz.pass = worstState <= tolState;
    out.push_back(std::move(ghz));

    CheckReport mm;
    mm.checkId = "states.minimal-maximal";
    mm.statement =
        "the zero box and its transform form the minimal/maximal "
        "entanglement pair with entropies 0 and log d";
    mm.params = {{"orders", order_list(ds)}, {"tol", tolState}};
    double worstMm = 0;
    bool mmPass = true;
    for (int d : ds) {
        auto rep = minimal_maximal_pair_check(d);
        worstMm = std::max(worstMm, std::abs(rep.zeroEntropy));
        worstMm = std::max(worstMm,
                           std::abs(rep.bellEntropy -
                                    std::log(static_cast<double>(d))));
        if (!rep.pass) mmPass = false;
    }
    mm.metrics = {{"maxEntropyDeviation", worstMm}};
    mm.pass = mmPass && worstMm <= tolState;
    out.push_back(std::move(mm));
    return out;
}

std::vector<CheckReport> check_braids(const CheckOptions& opt) {
    std::vector<CheckReport> out;
    auto ds = orders(opt, {2, 3, 4, 5});
    const int n = 4;
    double tol = tol_or(opt, 1e-10);
    int rhoCount = samples_or(opt, 20);

    CheckReport rel;
    rel.checkId = "braids.generator-relations";
    rel.statement =
        "the parafermion generators satisfy c^d = 1 and the q-exchange "
        "relation with exact scalars";
    rel.params = {{"orders", order_list(ds)}, {"strandPairs", n}};
    long long relFailures = 0;

    CheckReport trans;
    trans.checkId = "braids.transport";
    trans.statement =
        "the double braid transports a charge pair one pair to the right, "
        "and the composite of two double braids transports a two-pair "
        "charge block, for every charge tuple";
    trans.params = {{"orders", order_list(ds)},
                    {"strandPairs", n},
                    {"tol", tol}};
    double worstTrans = 0;

    CheckReport braidRel;
    braidRel.checkId = "braids.braid-relations";
    braidRel.statement =
        "the double braids are unitary and satisfy the braid-group "
        "relations (adjacent exchange up to a recorded phase, far "
        "commutation)";
    braidRel.params = {{"orders", order_list(ds)},
                       {"strandPairs", n},
                       {"tol", tol}};
    double worstBraid = 0;
    Json phases = Json::array();

    CheckReport inv;
    inv.checkId = "braids.product-state-invariance";
    inv.statement =
        "graded product states built from neutral single-pair densities "
        "are invariant under the braid adjoint action on all monomials of "
        "degree at most two, while a perturbed non-product state is "
        "detected";
    inv.params = {{"orders", order_list(ds)},
                  {"strandPairs", n},
                  {"statesPerOrder", rhoCount},
                  {"degreeCap", 2},
                  {"seed", opt.seed},
                  {"tol", tol}};
    double worstInv = 0;
    double minPerturbed = std::numeric_limits<double>::infinity();

    for (int d : ds) {
        auto rep = parafermion_generators(d, n);
        auto r = rep.c[0].ring;
        auto qs = ExactScalar::q_pow(r, 1);
        long long dim = rep.c[0].dim;
        auto id = MonomialMatrix::identity(r, dim);
        for (int a = 0; a < 2 * n; ++a) {
            if (!(rep.c[a].pow(d) == id)) ++relFailures;
            if (!(rep.c[a] * rep.c[a].inverse() == id)) ++relFailures;
            for (int b = a + 1; b < 2 * n; ++b) {
                MonomialMatrix scaledBa = rep.c[b] * rep.c[a];
                for (auto& ph : scaledBa.phase) ph = ph * qs;
                if (!(rep.c[a] * rep.c[b] == scaledBa)) ++relFailures;
            }
        }

        std::vector<Eigen::MatrixXcd> braids;
        for (int j = 1; j <= n - 1; ++j)
            braids.push_back(double_braid(rep, j).matrix);
        std::vector<std::vector<MonomialMatrix>> cpow(2 * n);
        for (int a = 0; a < 2 * n; ++a)
            for (int e = 0; e < d; ++e) cpow[a].push_back(rep.c[a].pow(e));

        for (int j = 1; j <= n - 1; ++j)
            for (int m = 0; m < d; ++m)
                for (int k = 0; k < d; ++k) {
                    auto x = cpow[2 * j - 2][m] * cpow[2 * j - 1][k];
                    auto y = cpow[2 * j][m] * cpow[2 * j + 1][k];
                    worstTrans = std::max(
                        worstTrans,
                        adjoint_transport_error(braids[j - 1], x, y));
                }
        for (int j = 2; j <= n - 1; ++j) {
            Eigen::MatrixXcd comp = braids[j - 2] * braids[j - 1];
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l)
                    for (int m = 0; m < d; ++m)
                        for (int w = 0; w < d; ++w) {
                            auto x = cpow[2 * j - 4][k] * cpow[2 * j - 3][l] *
                                     cpow[2 * j - 2][m] * cpow[2 * j - 1][w];
                            auto y = cpow[2 * j - 2][k] * cpow[2 * j - 1][l] *
                                     cpow[2 * j][m] * cpow[2 * j + 1][w];
                            worstTrans = std::max(
                                worstTrans,
                                adjoint_transport_error(comp, x, y));
                        }
        }

        // Braid-group relations on the braids already built (the same
        // criteria as the library's relation check).
        Eigen::MatrixXcd idDense = Eigen::MatrixXcd::Identity(dim, dim);
        for (const auto& bj : braids)
            worstBraid = std::max(worstBraid,
                                  (bj * bj.adjoint() - idDense).norm());
        Complex ybPhase = 1;
        for (std::size_t j = 0; j + 1 < braids.size(); ++j) {
            Eigen::MatrixXcd lhs = braids[j] * braids[j + 1] * braids[j];
            Eigen::MatrixXcd rhs = braids[j + 1] * braids[j] * braids[j + 1];
            Complex overlap = (rhs.adjoint() * lhs).trace();
            ybPhase = std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap)
                                                : Complex(1);
            worstBraid =
                std::max(worstBraid, (lhs - ybPhase * rhs).norm());
        }
        for (std::size_t j = 0; j < braids.size(); ++j)
            for (std::size_t k = j + 2; k < braids.size(); ++k)
                worstBraid = std::max(
                    worstBraid,
                    (braids[j] * braids[k] - braids[k] * braids[j]).norm());
        phases.push_back(Json::array({d, ybPhase.real(), ybPhase.imag()}));

        // Invariance over diagonal (neutral) product states. Precompute,
        // per braid j and monomial x, the vector t with
        // t_c = <b_j^† e_c, x b_j^† e_c>: then Tr(rho b_j x b_j^†) =
        // sum_c rho_cc t_c for every diagonal rho, and the unbraided
        // expectation reads off the phased-permutation diagonal of x.
        auto words = monomial_words(rep, 2);
        // Numeric phase vectors cached once per monomial.
        std::vector<Eigen::VectorXcd> cphase(words.size());
        for (std::size_t xi = 0; xi < words.size(); ++xi) {
            cphase[xi].resize(dim);
            for (long long c = 0; c < dim; ++c)
                cphase[xi](c) = words[xi].phase[c].to_complex();
        }
        auto apply_monomial = [&](std::size_t xi, const Eigen::VectorXcd& v) {
            const auto& x = words[xi];
            Eigen::VectorXcd w = Eigen::VectorXcd::Zero(dim);
            for (long long c2 = 0; c2 < dim; ++c2)
                w(x.perm[c2]) += cphase[xi](c2) * v(c2);
            return w;
        };
        std::vector<Eigen::VectorXcd> xdiag(words.size());
        std::vector<std::vector<Eigen::VectorXcd>> tvec(
            braids.size(), std::vector<Eigen::VectorXcd>(words.size()));
        std::vector<Eigen::MatrixXcd> bAdj;
        for (const auto& b : braids) bAdj.push_back(b.adjoint());
        for (std::size_t xi = 0; xi < words.size(); ++xi) {
            const auto& x = words[xi];
            Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(dim);
            for (long long c = 0; c < dim; ++c)
                if (x.perm[c] == c) diag(c) = cphase[xi](c);
            xdiag[xi] = diag;
            for (std::size_t j = 0; j < braids.size(); ++j) {
                Eigen::VectorXcd t(dim);
                Eigen::VectorXcd v(dim), w(dim);
                for (long long c = 0; c < dim; ++c) {
                    v = bAdj[j].col(c);
                    w.setZero();
                    for (long long c2 = 0; c2 < dim; ++c2)
                        w(x.perm[c2]) += cphase[xi](c2) * v(c2);
                    t(c) = v.dot(w);
                }
                tvec[j][xi] = t;
            }
        }
        auto diagonal_deviation = [&](const Eigen::VectorXcd& rhoDiag) {
            double dev = 0;
            for (std::size_t xi = 0; xi < words.size(); ++xi) {
                Complex base = rhoDiag.conjugate().dot(xdiag[xi]);
                for (std::size_t j = 0; j < braids.size(); ++j)
                    dev = std::max(
                        dev, std::abs(rhoDiag.conjugate().dot(tvec[j][xi]) -
                                      base));
            }
            return dev;
        };
        for (int i = 0; i < rhoCount; ++i) {
            std::mt19937_64 rng(split_seed(opt.seed + 8000ULL * d, i));
            auto rho = random_neutral_density(d, rng);
            auto st = product_state(rho, n);
            worstInv = std::max(
                worstInv, diagonal_deviation(st.rhoFull.diagonal()));
        }

        // Perturbation with charge coherence on the first pair only: the
        // degree-one monomials see it, and the braid transport moves their
        // support to pairs where the coherence is absent.
        std::mt19937_64 rng(split_seed(opt.seed + 8500ULL * d, 0));
        auto st = product_state(random_neutral_density(d, rng), n);
        Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
        long long slotOne = 1;
        for (int s = 1; s < n; ++s) slotOne *= d;
        psi(0) = 1.0 / std::sqrt(2.0);
        psi(slotOne) = 1.0 / std::sqrt(2.0);
        Eigen::VectorXcd prodDiag = st.rhoFull.diagonal();
        std::vector<Eigen::VectorXcd> uj;
        for (const auto& b : braids) uj.push_back(b.adjoint() * psi);
        double perturbedDev = 0;
        for (std::size_t xi = 0; xi < words.size(); ++xi) {
            Complex base = 0.7 * prodDiag.conjugate().dot(xdiag[xi]) +
                           0.3 * psi.dot(apply_monomial(xi, psi));
            for (std::size_t j = 0; j < braids.size(); ++j) {
                Complex moved =
                    0.7 * prodDiag.conjugate().dot(tvec[j][xi]) +
                    0.3 * uj[j].dot(apply_monomial(xi, uj[j]));
                perturbedDev = std::max(perturbedDev, std::abs(moved - base));
            }
        }
        minPerturbed = std::min(minPerturbed, perturbedDev);
    }

    rel.metrics = {{"failures", relFailures}};
    rel.pass = relFailures == 0;
    out.push_back(std::move(rel));

    trans.metrics = {{"maxDeviation", worstTrans}};
    trans.pass = worstTrans <= tol;
    out.push_back(std::move(trans));

    braidRel.metrics = {{"maxDeviation", worstBraid},
                        {"yangBaxterPhases", phases}};
    braidRel.pass = worstBraid <= tol;
    out.push_back(std::move(braidRel));

    inv.metrics = {{"maxDeviation", worstInv},
                   {"minPerturbedDeviation", minPerturbed}};
    inv.pass = worstInv <= tol && minPerturbed > 1e-4;
    out.push_back(std::move(inv));
    return out;
}

std::vector<CheckReport> check_sixj(const CheckOptions& opt) {
    std::vector<CheckReport> out;
    std::vector<int> ds;
    if (opt.d != 0) {
        if (opt.d < 3 || opt.d % 2 == 0)
            throw std::invalid_argument(
                "sixj: pointed categories need an odd order >= 3");
        ds = {opt.d};
    } else {
        ds = {3, 5, 7};
    }
    double tol = tol_or(opt, 1e-9);
    int randomTuples = samples_or(opt, 1000);

    CheckReport zd;
    zd.checkId = "sixj.pointed-cyclic";
    zd.statement =
        "the squared 6j symbols of the pointed cyclic categories satisfy "
        "the self-duality identity, with the modular S matrix in the role "
        "of the transform (full scan at order 3, random tuples above)";
    zd.params = {{"orders", order_list(ds)},
                 {"randomTuples", randomTuples},
                 {"seed", opt.seed},
                 {"tol", tol}};
    double worst = 0;
    long long checked = 0;
    bool pass = true;
    for (int d : ds) {
        auto cat = pointed_zd_category(d);
        std::vector<std::array<int, 6>> tuples =
            d == 3 ? all_6j_tuples(cat)
                   : random_6j_tuples(cat, randomTuples,
                                      split_seed(opt.seed, d));
        auto rep = verify_6j_duality(cat, tuples, tol);
        worst = std::max(worst, rep.maxDeviation);
        checked += rep.tuplesChecked;
        if (!rep.pass) pass = false;
    }
    zd.metrics = {{"maxDeviation", worst}, {"tuplesChecked", checked}};
    zd.pass = pass && worst <= tol;
    out.push_back(std::move(zd));

#ifdef CS_ENABLE_FIBONACCI
    if (opt.d == 0) {
        double fibTol = tol_or(opt, 1e-8);
        CheckReport fib;
        fib.checkId = "sixj.fibonacci";
        fib.statement =
            "the Fibonacci 6j data obtained by solving the pentagon "
            "constraints satisfies the self-duality identity on all 64 "
            "tuples";
        fib.params = {{"tol", fibTol}};
        auto cat = fibonacci_category();
        auto rep = verify_6j_duality(cat, all_6j_tuples(cat), fibTol);
        fib.metrics = {{"maxDeviation", rep.maxDeviation},
                       {"tuplesChecked", rep.tuplesChecked}};
        fib.pass = rep.pass;
        out.push_back(std::move(fib));
    }
#endif
    return out;
}

std::vector<CheckReport> check_all(const CheckOptions& opt) {
    std::vector<CheckReport> out;
    auto append = [&](std::vector<CheckReport> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };
    append(check_engine(opt));
    append(check_sft(opt));
    append(check_gates(opt));
    append(check_qfa(opt, "all"));
    append(check_rp(opt));
    append(check_states(opt));
    append(check_braids(opt));
    append(check_sixj(opt));
    std::stable_sort(out.begin(), out.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         if (a.checkId != b.checkId)
                             return a.checkId < b.checkId;
                         return a.params.dump() < b.params.dump();
                     });
    return out;
}

}  // namespace cs
