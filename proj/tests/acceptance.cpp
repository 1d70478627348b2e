// Acceptance suite: certifies the whole library end to end on seeded
// desk-scale instances (dimensions 4 and 4, systems of length 8, 100 trials
// per batch) and prints one pass/fail line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qframes/errors.hpp"
#include "qframes/harness.hpp"
#include "qframes/json_io.hpp"
#include "qframes/linalg.hpp"
#include "qframes/superspace.hpp"

using namespace qframes;

namespace {

int failures = 0;

void report(int index, const char* label, bool pass, double worst) {
    std::printf("[%s] criterion %2d: %s (worst=%.3g)\n", pass ? "PASS" : "FAIL", index,
                label, worst);
    if (!pass) {
        ++failures;
    }
}

struct Capture {
    int code = -1;
    std::string output;
};

Capture run_command(const std::string& cmd) {
    Capture r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) {
        return r;
    }
    char buf[8192];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) {
        r.output.append(buf, got);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

double entry_abs(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
    }
    return worst;
}

FrameSystem supported_frame(Rng& rng, std::size_t n, std::size_t m, std::size_t begin,
                            std::size_t end) {
    std::vector<QVector> vs;
    for (std::size_t i = 0; i < m; ++i) {
        vs.push_back(i >= begin && i < end ? gen_vector(rng, n) : QVector(n));
    }
    return make_frame(vs);
}

FrameSystem subspace_frame(Rng& rng, std::size_t n, std::size_t m, std::size_t r) {
    std::vector<QVector> span;
    for (std::size_t i = 0; i < r; ++i) {
        span.push_back(gen_vector(rng, n));
    }
    const QMatrix w = QMatrix::from_columns(gram_schmidt(span));
    std::vector<QVector> vs;
    for (std::size_t i = 0; i < m; ++i) {
        vs.push_back(w * gen_vector(rng, w.cols()));
    }
    return make_frame(vs);
}

/// Operator with a relative component of at least 0.1 outside R(T).
QMatrix leaking_operator(Rng& rng, const FrameSystem& f, double& rel_out) {
    const QMatrix inside = f.synthesis * gen_matrix(rng, f.length(), f.dim);
    const std::vector<QVector> perp = orth_complement(range_basis(f.synthesis), f.dim);
    QVector h = gen_vector(rng, f.dim);
    h = h * (1.0 / norm(h));
    const QMatrix leak =
        inside + outer(perp.front(), h) * (0.3 * std::max(operator_norm(inside), 1.0));
    const QMatrix projector =
        QMatrix::identity(f.dim) - f.synthesis * pinv(f.synthesis);
    rel_out = operator_norm(projector * leak) / operator_norm(leak);
    return leak;
}

double smallest_positive(const QMatrix& h) {
    const std::vector<double> values = hermitian_eigenvalues(h);
    const double floor = values.back() * static_cast<double>(h.rows()) * 1e-12;
    for (double v : values) {
        if (v > floor) {
            return v;
        }
    }
    return 0.0;
}

// --- criterion 1: quaternion algebra ----------------------------------------

void criterion_algebra() {
    const Quaternion one = Quaternion::one();
    const Quaternion units[4] = {one, Quaternion::unit_i(), Quaternion::unit_j(),
                                 Quaternion::unit_k()};
    const int expect_index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int expect_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    bool table_ok = true;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const Quaternion want = units[expect_index[a][b]] * double(expect_sign[a][b]);
            table_ok = table_ok && units[a] * units[b] == want;
        }
    }

    Rng rng = Rng::for_trial(42, 101, 0);
    double worst = 0.0;
    bool ok = table_ok;
    for (int t = 0; t < 1000; ++t) {
        const Quaternion p = gen_quaternion(rng);
        const Quaternion q = gen_quaternion(rng);
        const Quaternion r = gen_quaternion(rng);
        const double mult =
            std::fabs(abs(p * q) - abs(p) * abs(q)) / (1.0 + abs(p) * abs(q));
        const double assoc =
            abs((p * q) * r - p * (q * r)) / (1.0 + abs(p) * abs(q) * abs(r));
        worst = std::max({worst, mult, assoc});
        ok = ok && mult <= 1e-13 && assoc <= 1e-13;
    }
    report(1, "quaternion sign table, multiplicativity, associativity", ok, worst);
}

// --- criterion 2: embedding fidelity -----------------------------------------

void criterion_embedding() {
    Rng rng = Rng::for_trial(42, 102, 0);
    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const QMatrix p = gen_matrix(rng, 4, 5);
        const QMatrix q = gen_matrix(rng, 5, 3);
        const double scale = 1.0 + frobenius_norm(p) * frobenius_norm(q);
        const double hom = entry_abs(embed(p * q), embed(p) * embed(q)) / scale;
        const double star = entry_abs(embed(adjoint(p)), conj_transpose(embed(p))) /
                            (1.0 + frobenius_norm(p));
        worst = std::max({worst, hom, star});
        ok = ok && hom <= 1e-12 && star <= 1e-12;

        const QMatrix g = gen_matrix(rng, 4, 4);
        const QMatrix h = adjoint(g) * g;
        const double hscale = std::max(1.0, frobenius_norm(h));
        const std::vector<double> lam = hermitian_eigenvalues(h);
        const std::vector<double> doubled = complex_hermitian_eigenvalues(embed(h));
        for (std::size_t k = 0; k < lam.size(); ++k) {
            const double d = std::max(std::fabs(doubled[2 * k] - lam[k]),
                                      std::fabs(doubled[2 * k + 1] - lam[k])) /
                             hscale;
            worst = std::max(worst, d);
            ok = ok && d <= 1e-9;
        }
    }
    report(2, "embedding homomorphism, adjoint compatibility, doubled spectra", ok, worst);
}

// --- criterion 3: eigen / svd / pinv ------------------------------------------

void criterion_spectral() {
    Rng rng = Rng::for_trial(42, 103, 0);
    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const QMatrix g = gen_matrix(rng, 4, 4);
        const QMatrix h = adjoint(g) * g;
        const double hscale = std::max(1.0, frobenius_norm(h));
        const HermitianEig eig = hermitian_eig(h);
        for (std::size_t k = 0; k < eig.values.size(); ++k) {
            const double r =
                norm(h * eig.vectors[k] - eig.vectors[k] * eig.values[k]) / hscale;
            worst = std::max(worst, r);
            ok = ok && r <= 1e-9;
        }

        const QMatrix q = gen_matrix(rng, 4, 3) * gen_matrix(rng, 3, 6); // rank 3
        const QMatrix qp = pinv(q);
        const double qscale = std::max(1.0, operator_norm(q));
        const double pscale = std::max(1.0, operator_norm(qp));
        const double p1 = operator_norm(q * qp * q - q) / qscale;
        const double p2 = operator_norm(qp * q * qp - qp) / pscale;
        const double p3 = operator_norm(adjoint(q * qp) - q * qp);
        const double p4 = operator_norm(adjoint(qp * q) - qp * q);
        worst = std::max({worst, p1, p2, p3, p4});
        ok = ok && p1 <= 1e-8 && p2 <= 1e-8 && p3 <= 1e-8 && p4 <= 1e-8;

        // Operator norm equals sigma_max: independent complex route plus a
        // sampled supremum from below.
        const double direct = operator_norm(q);
        const ComplexMatrix cq = embed(q);
        const std::vector<double> gram_eigs =
            complex_hermitian_eigenvalues(conj_transpose(cq) * cq);
        const double via_complex = std::sqrt(std::max(0.0, gram_eigs.back()));
        const double gap = std::fabs(direct - via_complex) / qscale;
        worst = std::max(worst, gap);
        ok = ok && gap <= 1e-9;
        double sampled = 0.0;
        for (int s = 0; s < 10; ++s) {
            QVector u = gen_vector(rng, q.cols());
            u = u * (1.0 / norm(u));
            sampled = std::max(sampled, norm(q * u));
        }
        ok = ok && direct >= sampled - 1e-9;
    }
    report(3, "eigen residuals, Penrose identities, operator norm = sigma_max", ok, worst);
}

// --- criterion 4: Hilbert-space layer -----------------------------------------

void criterion_hilbert() {
    Rng rng = Rng::for_trial(42, 104, 0);
    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const QVector u = gen_vector(rng, 4);
        const QVector v = gen_vector(rng, 4);
        const double cs = std::max(0.0, abs(inner(u, v)) - norm(u) * norm(v));
        worst = std::max(worst, cs);
        ok = ok && cs <= 1e-12 * (1.0 + norm(u) * norm(v));

        std::vector<QVector> raw;
        for (int i = 0; i < 3; ++i) {
            raw.push_back(gen_vector(rng, 4));
        }
        const std::vector<QVector> basis = gram_schmidt(raw);
        QVector w(4);
        for (const QVector& z : basis) {
            w = w + z * gen_quaternion(rng);
        }
        double energy = 0.0;
        for (const QVector& z : basis) {
            energy += norm_sq(inner(z, w));
        }
        const double parseval = std::fabs(norm_sq(w) - energy) / (1.0 + norm_sq(w));
        worst = std::max(worst, parseval);
        ok = ok && parseval <= 1e-10;

        std::vector<QVector> a{gen_vector(rng, 4), gen_vector(rng, 4)};
        const std::vector<QVector> complement = orth_complement(a, 4);
        const std::vector<QVector> doubled = orth_complement(complement, 4);
        const std::vector<QVector> span = gram_schmidt(a);
        double dc = 0.0;
        for (const QVector& z : doubled) {
            QVector res = z;
            for (int pass = 0; pass < 2; ++pass) {
                for (const QVector& b : span) {
                    res = res - b * inner(b, res);
                }
            }
            dc = std::max(dc, norm(res));
        }
        worst = std::max(worst, dc);
        ok = ok && dc <= 1e-9;
    }
    report(4, "Cauchy-Schwarz, orthonormalized Parseval, double complement", ok, worst);
}

// --- criterion 5: Douglas equivalence ------------------------------------------

void criterion_douglas() {
    Rng rng = Rng::for_trial(42, 105, 0);
    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        // Constructive: L = M X0 certifies everywhere with tight residuals.
        const QMatrix m = gen_matrix(rng, 4, 8);
        const QMatrix l = m * gen_matrix(rng, 8, 4);
        const DouglasResult d = douglas_check(l, m, 1e-9);
        const double l_norm = operator_norm(l);
        bool c_ok = d.holds && d.residual <= 1e-9;
        if (d.holds) {
            const double fr = operator_norm(m * *d.factor - l) / l_norm;
            const double scale = std::max(1.0, l_norm * l_norm);
            c_ok = c_ok && fr <= 1e-9 &&
                   psd_geq(l * adjoint(l), (m * adjoint(m)) * *d.majorant, 1e-8 * scale);
            worst = std::max({worst, d.residual, fr});
        }

        // Adversarial: a guaranteed leak of relative size >= 0.1 refuses all
        // three certificates.
        const FrameSystem host = subspace_frame(rng, 4, 8, 3);
        double rel = 0.0;
        const QMatrix bad = leaking_operator(rng, host, rel);
        const DouglasResult db = douglas_check(bad, host.synthesis, 1e-9);
        const double bad_norm = operator_norm(bad);
        const double fr_bad =
            operator_norm(host.synthesis * (pinv(host.synthesis) * bad) - bad) / bad_norm;
        const double lam = smallest_positive(host.synthesis * adjoint(host.synthesis));
        const double decisive = 2.0 * bad_norm * bad_norm / lam;
        const bool majorized =
            psd_geq(bad * adjoint(bad), (host.synthesis * adjoint(host.synthesis)) * decisive,
                    1e-8 * std::max(1.0, bad_norm * bad_norm));
        const bool a_ok = rel >= 0.1 && !db.holds && fr_bad > 0.05 && !majorized;

        ok = ok && c_ok && a_ok;
    }
    report(5, "Douglas equivalence: constructive certify, adversarial refuse", ok, worst);
}

// --- criterion 6: K-frame characterization --------------------------------------

void criterion_kframe() {
    Rng rng = Rng::for_trial(42, 106, 0);
    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        // Constructive half of the 200 mixed instances.
        const KFrameInstance inst = gen_kframe_instance(rng, 4, 8);
        const KFrameReport rep = kframe_check(inst.frame, inst.op, 1e-8, true);
        bool c_ok = rep.is_kframe && !rep.unbounded && rep.lower_bound.has_value();
        if (c_ok) {
            const double k_norm = operator_norm(inst.op);
            const QMatrix kk = inst.op * adjoint(inst.op);
            const double fr =
                operator_norm(inst.frame.synthesis * *rep.factor - inst.op) / k_norm;
            const bool factor_flag = fr <= 1e-8;
            const bool bound_flag = psd_geq(kk * *rep.lower_bound, inst.frame.frame_op, 1e-8);
            const double c_star = smallest_positive(inst.frame.frame_op) /
                                  (2.0 * k_norm * k_norm);
            const bool exists_flag = psd_geq(kk * c_star, inst.frame.frame_op, 1e-8);
            const bool optimal_flag = rep.optimal_lower_bound &&
                                      *rep.optimal_lower_bound >= *rep.lower_bound - 1e-6;
            c_ok = factor_flag && bound_flag && exists_flag && optimal_flag;
            worst = std::max({worst, fr, rep.range_residual});
        }

        // Adversarial half: every flag must flip to false together.
        const FrameSystem weak = subspace_frame(rng, 4, 8, 3);
        double rel = 0.0;
        const QMatrix bad = leaking_operator(rng, weak, rel);
        const KFrameReport rep2 = kframe_check(weak, bad, 1e-8, false);
        const double bad_norm = operator_norm(bad);
        const double fr2 =
            operator_norm(weak.synthesis * (pinv(weak.synthesis) * bad) - bad) / bad_norm;
        const double c_star2 =
            smallest_positive(weak.frame_op) / (2.0 * bad_norm * bad_norm);
        const bool exists2 = psd_geq((bad * adjoint(bad)) * c_star2, weak.frame_op, 1e-8);
        const bool a_ok = !rep2.is_kframe && fr2 > 0.05 && !exists2;

        ok = ok && c_ok && a_ok;
    }
    report(6, "K-frame four-way agreement, validated lower bound, bisection", ok, worst);
}

// --- criterion 7: duality --------------------------------------------------------

void criterion_duality() {
    Rng rng = Rng::for_trial(42, 107, 0);
    bool ok = true;
    double worst = 0.0;

    const KFrameInstance inst = gen_kframe_instance(rng, 4, 8);
    const FrameSystem dual = kdual_canonical(inst.frame, inst.op);
    const double k_norm = operator_norm(inst.op);
    const QMatrix k_star = adjoint(inst.op);
    for (int t = 0; t < 100; ++t) {
        const QVector u = gen_vector(rng, 4);
        QVector forward(4), flipped(4);
        for (std::size_t i = 0; i < inst.frame.length(); ++i) {
            forward = forward + inst.frame.vectors[i] * inner(dual.vectors[i], u);
            flipped = flipped + dual.vectors[i] * inner(inst.frame.vectors[i], u);
        }
        const double r1 = norm(inst.op * u - forward) / (k_norm * norm(u));
        const double r2 = norm(k_star * u - flipped) / (k_norm * norm(u));
        worst = std::max({worst, r1, r2});
        ok = ok && r1 <= 1e-9 && r2 <= 1e-9;
    }

    for (int t = 0; t < 10; ++t) {
        const FrameSystem member =
            kdual_family(inst.frame, inst.op, gen_matrix(rng, 8, 4));
        ok = ok && kdual_verify(inst.frame, member, inst.op);
    }

    // Interchangeability <=> self-adjointness, both directions.
    const QMatrix hermitian = inst.op * adjoint(inst.op);
    const double herm_skew = operator_norm(hermitian - adjoint(hermitian));
    const FrameSystem dual_h = kdual_canonical(inst.frame, hermitian);
    ok = ok && herm_skew <= 1e-10 && interchange_check(inst.frame, dual_h, hermitian);

    const double generic_skew = operator_norm(inst.op - adjoint(inst.op));
    ok = ok && generic_skew > 1e-10 && !interchange_check(inst.frame, dual, inst.op);

    report(7, "canonical dual reconstruction, family duals, interchange law", ok, worst);
}

// --- criterion 8: minimality and uniqueness ---------------------------------------

void criterion_minimality() {
    Rng rng = Rng::for_trial(42, 108, 0);
    bool ok = true;
    double worst = 0.0;

    // Injective synthesis: the family collapses pairwise.
    const KFrameInstance thin = gen_kframe_instance(rng, 4, 3);
    ok = ok && k_minimal_check(thin.frame, thin.op).minimal;
    std::vector<FrameSystem> members;
    members.push_back(kdual_canonical(thin.frame, thin.op));
    for (int t = 0; t < 4; ++t) {
        members.push_back(kdual_family(thin.frame, thin.op, gen_matrix(rng, 3, 4)));
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            double dist = 0.0;
            for (std::size_t i = 0; i < members[a].length(); ++i) {
                dist = std::max(dist,
                                norm(members[a].vectors[i] - members[b].vectors[i]));
            }
            worst = std::max(worst, dist);
            ok = ok && dist <= 1e-10;
        }
    }

    // Deficient synthesis: two verified duals separated by construction.
    const KFrameInstance wide = gen_kframe_instance(rng, 4, 8);
    const KMinimalResult multiple = k_minimal_check(wide.frame, wide.op);
    ok = ok && !multiple.minimal && multiple.witness_duals.has_value();
    if (multiple.witness_duals) {
        const auto& [first, second] = *multiple.witness_duals;
        ok = ok && kdual_verify(wide.frame, first, wide.op) &&
             kdual_verify(wide.frame, second, wide.op);
        double sep_sq = 0.0;
        for (std::size_t i = 0; i < first.length(); ++i) {
            sep_sq += norm_sq(first.vectors[i] - second.vectors[i]);
        }
        ok = ok && std::sqrt(sep_sq) >= 1e-3;
    }

    // K-orthonormal basis: the unique dual is the adjoint image, and the
    // canonical route lands on it.
    std::vector<QVector> raw;
    for (int i = 0; i < 3; ++i) {
        raw.push_back(gen_vector(rng, 4));
    }
    const FrameSystem onb = make_frame(gram_schmidt(raw));
    std::vector<QVector> unitary_raw;
    for (int i = 0; i < 4; ++i) {
        unitary_raw.push_back(gen_vector(rng, 4));
    }
    const QMatrix rotation = QMatrix::from_columns(gram_schmidt(unitary_raw));
    const QMatrix k = onb.frame_op * rotation;
    ok = ok && k_orthonormal_check(onb, k);
    const FrameSystem stated = k_orthonormal_dual(onb, k);
    const FrameSystem canonical = kdual_canonical(onb, k);
    double dev = 0.0;
    for (std::size_t i = 0; i < stated.length(); ++i) {
        dev = std::max(dev, norm(stated.vectors[i] - canonical.vectors[i]));
    }
    worst = std::max(worst, dev);
    ok = ok && dev <= 1e-10 && k_minimal_check(onb, k).minimal;

    report(8, "dual family collapse, distinct witnesses, K-orthonormal dual", ok, worst);
}

// --- criterion 9: super-space identities --------------------------------------------

void criterion_superspace() {
    Rng rng = Rng::for_trial(42, 109, 0);
    bool ok = true;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        // Component/combined operator identities.
        const SuperFrame sf = make_super_frame(gen_frame(rng, 4, 8), gen_frame(rng, 4, 8));
        const SuperBesselReport bessel = super_bessel_equivalence(sf);
        const double split = super_frame_operator_decomposition(sf) /
                             (1.0 + frame_bounds(sf.combined).upper);
        worst = std::max(worst, split);
        ok = ok && bessel.equivalence && bessel.bound_ok && split <= 1e-10;

        // Adjoint of a block operator is exactly the block of adjoints.
        const QMatrix k1 = gen_matrix(rng, 4, 4);
        const QMatrix k2 = gen_matrix(rng, 4, 4);
        ok = ok && adjoint(oplus_op(k1, k2)) == oplus_op(adjoint(k1), adjoint(k2));

        // Duplicated systems reject every nonzero block operator.
        const DuplicateObstruction blocked =
            duplicate_obstruction(sf.left, k1, QMatrix(4, 4));
        ok = ok && !blocked.is_super_kframe && blocked.witness.has_value();

        // Orthogonal-range assembly certifies at min(A1, A2).
        const FrameSystem fu = supported_frame(rng, 4, 8, 0, 4);
        const FrameSystem fv = supported_frame(rng, 4, 8, 4, 8);
        const QMatrix c1 = fu.synthesis * gen_matrix(rng, 8, 4);
        const QMatrix c2 = fv.synthesis * gen_matrix(rng, 8, 4);
        const OrthogonalRangesResult orth = orthogonal_ranges_sufficient(fu, c1, fv, c2);
        bool orth_ok = orth.applies && orth.super_frame.has_value();
        if (orth_ok && std::isfinite(orth.lower_bound)) {
            const QMatrix kk = oplus_op(c1, c2) * adjoint(oplus_op(c1, c2));
            orth_ok = psd_geq(kk * (orth.lower_bound - 1e-8),
                              orth.super_frame->combined.frame_op,
                              1e-8 * std::max(1.0, frame_bounds(orth.super_frame->combined).upper));
        }
        ok = ok && orth_ok;

        // Combined minimality agrees with the direct kernel oracle.
        const QMatrix k_all = sf.combined.synthesis * gen_matrix(rng, 8, 8);
        const bool minimal_flag = super_minimal_check(sf, k_all);
        ok = ok && minimal_flag == k_minimal_check(sf.combined, k_all).minimal;

        // Dual recombination equivalence, both directions.
        const DualCombineResult clean = super_dual_combine(
            fu, kdual_canonical(fu, c1), c1, fv, kdual_canonical(fv, c2), c2);
        ok = ok && clean.equivalent && clean.combined_dual;
        const FrameSystem gu = gen_frame(rng, 4, 8);
        const FrameSystem gv = gen_frame(rng, 4, 8);
        const QMatrix h1 = gu.synthesis * gen_matrix(rng, 8, 4);
        const QMatrix h2 = gv.synthesis * gen_matrix(rng, 8, 4);
        const DualCombineResult tangled = super_dual_combine(
            gu, kdual_canonical(gu, h1), h1, gv, kdual_canonical(gv, h2), h2);
        ok = ok && !tangled.equivalent && !tangled.combined_dual;
    }
    report(9, "super-space identities, obstructions, assembly, dual recombination", ok,
           worst);
}

// --- criterion 10: determinism ---------------------------------------------------

void criterion_determinism(const std::string& cli) {
    const std::string base = cli + " verify-all --seed 42";
    const Capture a = run_command(base);
    const Capture b = run_command(base);
    const Capture c = run_command(base + " --threads 4");
    const bool ok = a.code == 0 && b.code == 0 && c.code == 0 && !a.output.empty() &&
                    a.output == b.output && a.output == c.output;
    report(10, "verify-all --seed 42 byte-identical across runs and thread counts", ok,
           ok ? 0.0 : 1.0);
}

} // namespace

int main(int argc, char** argv) {
    criterion_algebra();
    criterion_embedding();
    criterion_spectral();
    criterion_hilbert();
    criterion_douglas();
    criterion_kframe();
    criterion_duality();
    criterion_minimality();
    criterion_superspace();
    if (argc > 1) {
        criterion_determinism(argv[1]);
    } else {
        report(10, "determinism (CLI path not provided)", false, 1.0);
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", failures);
    return 1;
}
