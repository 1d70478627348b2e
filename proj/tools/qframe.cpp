// Command-line front end: load frames and operators from JSON, run individual
// certifications or the full randomized suite, and emit JSON reports.
//
// Exit codes: 0 = property holds / command succeeded, 1 = property fails
// (report still emitted), 2 = usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "qframes/errors.hpp"
#include "qframes/harness.hpp"
#include "qframes/json_io.hpp"
#include "qframes/linalg.hpp"
#include "qframes/superspace.hpp"

namespace {

using qframes::Json;

struct Options {
    std::string frame;
    std::string frame2;
    std::string dual;
    std::string op;
    std::string op2;
    std::string out;
    double tol = -1.0;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::size_t threads = 1;
};

double resolve_tol(const Options& opt, double fallback) {
    if (opt.tol >= 0.0) {
        return opt.tol;
    }
    if (const char* env = std::getenv("QFRAME_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) {
            return v;
        }
    }
    return fallback;
}

void emit(const Options& opt, const Json& j) {
    if (opt.out.empty()) {
        std::cout << qframes::dump_json(j);
    } else {
        qframes::write_json_file(opt.out, j);
    }
}

qframes::QMatrix load_single_operator(const std::string& path) {
    const qframes::LoadedOperator op =
        qframes::operator_from_json(qframes::load_json_file(path));
    if (!op.single) {
        throw qframes::ParseError(path + ": expected a single operator matrix");
    }
    return *op.single;
}

int cmd_bounds(const Options& opt) {
    const qframes::FrameSystem f =
        qframes::frame_from_json(qframes::load_json_file(opt.frame));
    const double tol = resolve_tol(opt, 1e-9);
    const qframes::FrameBounds b = qframes::frame_bounds(f);
    const bool frame = qframes::is_frame(f);
    Json j{{"A", b.lower},
           {"B", b.upper},
           {"is_frame", frame},
           {"parseval", std::max(std::fabs(b.lower - 1.0), std::fabs(b.upper - 1.0)) <= tol},
           {"tolerance", tol},
           {"property", "two-sided frame inequality with bounds from the frame operator spectrum"}};
    emit(opt, j);
    return frame ? 0 : 1;
}

int cmd_douglas(const Options& opt) {
    const qframes::QMatrix l = load_single_operator(opt.op);
    const qframes::QMatrix m = load_single_operator(opt.op2);
    const double tol = resolve_tol(opt, 1e-8);
    const qframes::DouglasResult d = qframes::douglas_check(l, m, tol);
    Json j{{"holds", d.holds},
           {"residual", d.residual},
           {"tolerance", tol},
           {"property", "range inclusion R(L) in R(M) with factor L = M X and majorization"}};
    if (d.majorant) {
        j["majorant"] = *d.majorant;
    }
    if (d.factor) {
        j["factor"] = qframes::to_json(*d.factor);
    }
    emit(opt, j);
    return d.holds ? 0 : 1;
}

int cmd_check_kframe(const Options& opt) {
    const qframes::FrameSystem f =
        qframes::frame_from_json(qframes::load_json_file(opt.frame));
    const qframes::QMatrix k = load_single_operator(opt.op);
    const double tol = resolve_tol(opt, 1e-8);
    const qframes::KFrameReport rep = qframes::kframe_check(f, k, tol);
    Json j = qframes::to_json(rep);
    j["property"] = "lower bound A ||K* u||^2 <= sum |<u_i, u>|^2 via range inclusion";
    emit(opt, j);
    return rep.is_kframe ? 0 : 1;
}

int cmd_kdual(const Options& opt) {
    const qframes::FrameSystem f =
        qframes::frame_from_json(qframes::load_json_file(opt.frame));
    const qframes::QMatrix k = load_single_operator(opt.op);
    try {
        const qframes::FrameSystem d = qframes::kdual_canonical(f, k);
        emit(opt, qframes::to_json(d));
        return 0;
    } catch (const qframes::NotAKFrame& e) {
        emit(opt, Json{{"error", e.what()}, {"is_kframe", false}});
        return 1;
    }
}

int cmd_kdual_verify(const Options& opt) {
    const qframes::FrameSystem f =
        qframes::frame_from_json(qframes::load_json_file(opt.frame));
    const qframes::FrameSystem d =
        qframes::frame_from_json(qframes::load_json_file(opt.dual));
    const qframes::QMatrix k = load_single_operator(opt.op);
    double tol = resolve_tol(opt, -1.0);
    if (tol < 0.0) {
        tol = 1e-9 * (1.0 + qframes::operator_norm(f.synthesis));
    }
    const bool ok = qframes::kdual_verify(f, d, k, tol);
    const double residual = qframes::operator_norm(
        k - f.synthesis * qframes::adjoint(d.synthesis));
    Json j{{"verified", ok},
           {"residual", residual},
           {"tolerance", tol},
           {"property", "dual reconstruction K = T_F adjoint(T_D)"}};
    emit(opt, j);
    return ok ? 0 : 1;
}

int cmd_minimal(const Options& opt) {
    const qframes::FrameSystem f =
        qframes::frame_from_json(qframes::load_json_file(opt.frame));
    const qframes::QMatrix k = load_single_operator(opt.op);
    const double tol = resolve_tol(opt, 1e-8);
    try {
        const qframes::KMinimalResult r = qframes::k_minimal_check(f, k, tol);
        Json j{{"minimal", r.minimal},
               {"tolerance", tol},
               {"property", "injective synthesis operator, equivalently a unique dual"}};
        if (r.witness_duals) {
            j["witness_duals"] = Json::array({qframes::to_json(r.witness_duals->first),
                                              qframes::to_json(r.witness_duals->second)});
        }
        emit(opt, j);
        return r.minimal ? 0 : 1;
    } catch (const qframes::NotAKFrame& e) {
        emit(opt, Json{{"error", e.what()}, {"is_kframe", false}});
        return 1;
    }
}

int cmd_konb(const Options& opt) {
    const qframes::FrameSystem f =
        qframes::frame_from_json(qframes::load_json_file(opt.frame));
    const qframes::QMatrix k = load_single_operator(opt.op);
    const double tol = resolve_tol(opt, 1e-9);
    const bool ok = qframes::k_orthonormal_check(f, k, tol);
    Json j{{"k_orthonormal", ok},
           {"tolerance", tol},
           {"property", "orthonormal system forming a Parseval K-frame (K K* = S)"}};
    if (ok) {
        j["dual"] = qframes::to_json(qframes::k_orthonormal_dual(f, k, tol));
    }
    emit(opt, j);
    return ok ? 0 : 1;
}

int cmd_super_check(const Options& opt) {
    const qframes::SuperFrame sf =
        qframes::super_frame_from_json(qframes::load_json_file(opt.frame));
    const qframes::LoadedOperator op =
        qframes::operator_from_json(qframes::load_json_file(opt.op));
    const double tol = resolve_tol(opt, 1e-8);

    const qframes::QMatrix k =
        op.single ? *op.single : qframes::oplus_op(op.blocks->first, op.blocks->second);
    const qframes::SuperBesselReport bessel = qframes::super_bessel_equivalence(sf);
    const double split_residual = qframes::super_frame_operator_decomposition(sf);
    const qframes::KFrameReport combined = qframes::kframe_check(sf.combined, k, tol);

    Json j{{"bessel",
            Json{{"left_bound", bessel.bound_left},
                 {"right_bound", bessel.bound_right},
                 {"combined_bound", bessel.bound_combined},
                 {"bound_ok", bessel.bound_ok}}},
           {"frame_operator_split_residual", split_residual},
           {"combined", qframes::to_json(combined)},
           {"tolerance", tol},
           {"property",
            "block operator certification on the direct sum with component decompositions"}};

    bool ok = combined.is_kframe && bessel.bound_ok &&
              split_residual <= 1e-9 * (1.0 + bessel.bound_combined);
    if (op.blocks && combined.is_kframe) {
        const auto [left, right] =
            qframes::component_kframes(sf, op.blocks->first, op.blocks->second, tol);
        const qframes::RangeConditionReport ranges = qframes::necessary_range_condition(
            sf, op.blocks->first, op.blocks->second, tol);
        const bool minimal = qframes::super_minimal_check(sf, k, tol);
        j["components"] = Json{{"left", qframes::to_json(left)},
                               {"right", qframes::to_json(right)}};
        j["range_conditions"] = Json{{"k1_residual", ranges.residual_k1},
                                     {"k1_ok", ranges.range_k1_in_t1_null_t2},
                                     {"k2_residual", ranges.residual_k2},
                                     {"k2_ok", ranges.range_k2_in_t2_null_t1}};
        j["minimal"] = minimal;
        ok = ok && left.is_kframe && right.is_kframe && ranges.range_k1_in_t1_null_t2 &&
             ranges.range_k2_in_t2_null_t1;
    }
    emit(opt, j);
    return ok ? 0 : 1;
}

int cmd_super_dual(const Options& opt) {
    const qframes::SuperFrame sf =
        qframes::super_frame_from_json(qframes::load_json_file(opt.frame));
    const qframes::SuperFrame sd =
        qframes::super_frame_from_json(qframes::load_json_file(opt.dual));
    const qframes::LoadedOperator op =
        qframes::operator_from_json(qframes::load_json_file(opt.op));
    if (!op.blocks) {
        throw qframes::ParseError("super-dual requires a block operator file {K1, K2}");
    }
    const double tol = resolve_tol(opt, 1e-9);
    try {
        const auto [left_ok, right_ok] =
            qframes::super_dual_split(sf, sd, op.blocks->first, op.blocks->second);
        const qframes::DualCombineResult combine = qframes::super_dual_combine(
            sf.left, sd.left, op.blocks->first, sf.right, sd.right, op.blocks->second,
            tol);
        Json j{{"combined_dual", true},
               {"left_dual", left_ok},
               {"right_dual", right_ok},
               {"cross_residuals",
                Json::array({combine.cross_residual_left, combine.cross_residual_right})},
               {"equivalent", combine.equivalent},
               {"tolerance", tol},
               {"property", "block dual splits and recombines when cross terms vanish"}};
        emit(opt, j);
        return left_ok && right_ok && combine.equivalent ? 0 : 1;
    } catch (const qframes::NotADual& e) {
        emit(opt, Json{{"error", e.what()}, {"combined_dual", false}});
        return 1;
    }
}

int cmd_gen(const Options& opt) {
    qframes::GenConfig cfg;
    cfg.seed = opt.seed;
    qframes::Rng rng(cfg.seed);

    const qframes::KFrameInstance inst = qframes::gen_kframe_instance(rng, cfg.n1, cfg.m);
    const qframes::FrameSystem right = qframes::gen_frame(rng, cfg.n2, cfg.m);
    const qframes::SuperFrame sf = qframes::make_super_frame(inst.frame, right);
    const qframes::QMatrix k1 = inst.op;
    const qframes::QMatrix k2 =
        right.synthesis * qframes::gen_matrix(rng, cfg.m, cfg.n2);

    const std::string dir = opt.out.empty() ? std::string(".") : opt.out;
    const std::string frame_path = dir + "/frame.json";
    const std::string op_path = dir + "/op.json";
    const std::string super_path = dir + "/superframe.json";
    const std::string ops_path = dir + "/operators.json";
    qframes::write_json_file(frame_path, qframes::to_json(inst.frame));
    qframes::write_json_file(op_path, qframes::to_json(inst.op));
    qframes::write_json_file(super_path, qframes::to_json(sf));
    qframes::write_json_file(
        ops_path, Json{{"K1", qframes::to_json(k1)}, {"K2", qframes::to_json(k2)}});

    std::cout << qframes::dump_json(
        Json{{"seed", cfg.seed},
             {"files", Json::array({frame_path, op_path, super_path, ops_path})}});
    return 0;
}

int cmd_verify_all(const Options& opt) {
    qframes::GenConfig cfg;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    cfg.tol = resolve_tol(opt, 1e-8);
    cfg.threads = opt.threads;
    const qframes::SuiteReport rep = qframes::run_suite(cfg);
    emit(opt, qframes::to_json(rep));
    return rep.overall ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternionic frame and K-frame certification toolkit"};
    app.require_subcommand(1);
    Options opt;

    const auto add_tol = [&](CLI::App* sub) {
        sub->add_option("--tol", opt.tol, "tolerance override (QFRAME_TOL fallback)");
    };
    const auto add_out = [&](CLI::App* sub) {
        sub->add_option("--out", opt.out, "output path (default: stdout)");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "frame bounds A, B of a system");
    bounds->add_option("--frame", opt.frame, "frame JSON file")->required();
    add_tol(bounds);
    add_out(bounds);

    CLI::App* douglas =
        app.add_subcommand("douglas", "range inclusion / factorization check");
    douglas->add_option("--op", opt.op, "operator L JSON file")->required();
    douglas->add_option("--op2", opt.op2, "operator M JSON file")->required();
    add_tol(douglas);
    add_out(douglas);

    CLI::App* check = app.add_subcommand("check-kframe", "K-frame certification");
    check->add_option("--frame", opt.frame, "frame JSON file")->required();
    check->add_option("--op", opt.op, "operator K JSON file")->required();
    add_tol(check);
    add_out(check);

    CLI::App* kdual = app.add_subcommand("kdual", "canonical K-dual system");
    kdual->add_option("--frame", opt.frame, "frame JSON file")->required();
    kdual->add_option("--op", opt.op, "operator K JSON file")->required();
    add_tol(kdual);
    add_out(kdual);

    CLI::App* verify = app.add_subcommand("kdual-verify", "verify a dual pair");
    verify->add_option("--frame", opt.frame, "frame JSON file")->required();
    verify->add_option("--dual", opt.dual, "dual frame JSON file")->required();
    verify->add_option("--op", opt.op, "operator K JSON file")->required();
    add_tol(verify);
    add_out(verify);

    CLI::App* minimal = app.add_subcommand("minimal", "K-minimality check");
    minimal->add_option("--frame", opt.frame, "frame JSON file")->required();
    minimal->add_option("--op", opt.op, "operator K JSON file")->required();
    add_tol(minimal);
    add_out(minimal);

    CLI::App* konb = app.add_subcommand("konb", "K-orthonormal basis check and dual");
    konb->add_option("--frame", opt.frame, "frame JSON file")->required();
    konb->add_option("--op", opt.op, "operator K JSON file")->required();
    add_tol(konb);
    add_out(konb);

    CLI::App* super_check =
        app.add_subcommand("super-check", "direct-sum system certification");
    super_check->add_option("--frame", opt.frame, "super frame JSON file")->required();
    super_check->add_option("--op", opt.op, "operator file (matrix or {K1, K2})")
        ->required();
    add_tol(super_check);
    add_out(super_check);

    CLI::App* super_dual =
        app.add_subcommand("super-dual", "split/combine duality on a direct sum");
    super_dual->add_option("--frame", opt.frame, "super frame JSON file")->required();
    super_dual->add_option("--dual", opt.dual, "super dual JSON file")->required();
    super_dual->add_option("--op", opt.op, "block operator file {K1, K2}")->required();
    add_tol(super_dual);
    add_out(super_dual);

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded sample instance");
    gen->add_option("--seed", opt.seed, "generator seed");
    gen->add_option("--out", opt.out, "output directory (default: .)");

    CLI::App* verify_all =
        app.add_subcommand("verify-all", "run the full randomized certification suite");
    verify_all->add_option("--seed", opt.seed, "suite seed");
    verify_all->add_option("--trials", opt.trials, "trials per entry");
    verify_all->add_option("--threads", opt.threads, "worker threads (default 1)");
    add_tol(verify_all);
    add_out(verify_all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(opt);
        if (douglas->parsed()) return cmd_douglas(opt);
        if (check->parsed()) return cmd_check_kframe(opt);
        if (kdual->parsed()) return cmd_kdual(opt);
        if (verify->parsed()) return cmd_kdual_verify(opt);
        if (minimal->parsed()) return cmd_minimal(opt);
        if (konb->parsed()) return cmd_konb(opt);
        if (super_check->parsed()) return cmd_super_check(opt);
        if (super_dual->parsed()) return cmd_super_dual(opt);
        if (gen->parsed()) return cmd_gen(opt);
        if (verify_all->parsed()) return cmd_verify_all(opt);
    } catch (const qframes::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qframes::DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const qframes::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
