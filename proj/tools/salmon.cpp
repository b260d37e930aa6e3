// salmon: exact defining equations (degrees 5, 6, 9) for the fourth secant
// variety of three-factor Segre products, and a border-rank <= 4 membership
// test built from them.
//
// Subcommands: gen, test, sample, scan, dims. Exit codes: 0 success,
// 2 usage error, 3 input error, 4 internal contract violation.

#include <iostream>

#include <CLI11.hpp>

#include "salmon/geometry.hpp"
#include "salmon/membership.hpp"
#include "salmon/parallel.hpp"
#include "salmon/poly_io.hpp"
#include "salmon/schur.hpp"

namespace {

salmon::Dims parse_dims(const std::string& s) {
    salmon::Dims d;
    char c1 = 0, c2 = 0;
    std::istringstream is(s);
    if (!(is >> d.a >> c1 >> d.b >> c2 >> d.c) || c1 != ',' || c2 != ',' || !is.eof() || d.a < 1 ||
        d.b < 1 || d.c < 1)
        throw salmon::input_error("bad dims '" + s + "'; expected a,b,c");
    return d;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        salmon::write_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equations and membership tests for tensor border rank <= 4"};
    app.require_subcommand(1);

    std::string dims_str = "3,3,4";
    std::string out_path;
    std::string mode = "exact";
    std::uint64_t seed = 1;
    unsigned threads = 0;
    // Global flags; subcommands fall through to them.
    app.add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
    app.add_option("--seed", seed, "RNG seed, recorded in every randomized output")->capture_default_str();
    app.add_option("--mode", mode, "exact or numeric")->capture_default_str();
    app.add_option("--out", out_path, "output path (default stdout)");

    auto* gen = app.add_subcommand("gen", "generate a module basis as a polynomial text file");
    std::string module_name;
    gen->add_option("--module", module_name, "M5, M6, M9 or strassen")->required();
    gen->add_option("--dims", dims_str, "ambient dims a,b,c")->capture_default_str();
    gen->fallthrough();

    auto* test = app.add_subcommand("test", "border-rank <= 4 membership report for a tensor");
    std::string in_path;
    bool use_friedland = false;
    int trials = 20;
    double tol = 1e-10;
    test->add_option("--in", in_path, "tensor JSON file");
    test->add_flag("--friedland", use_friedland, "use the built-in Friedland point");
    test->add_option("--trials", trials, "random compressions per family")->capture_default_str();
    test->add_option("--tol", tol, "vanishing tolerance in numeric mode")->capture_default_str();
    test->fallthrough();

    auto* sample = app.add_subcommand("sample", "sample secant / subspace / generic tensors");
    int secant_r = 0;
    std::string subspace_str;
    bool generic = false;
    sample->add_option("--secant", secant_r, "rank-r secant sample");
    sample->add_option("--subspace", subspace_str, "subspace sample with target a',b',c'");
    sample->add_flag("--generic", generic, "uniform integer-entry tensor");
    sample->add_option("--dims", dims_str, "ambient dims a,b,c")->capture_default_str();
    sample->fallthrough();

    auto* scan = app.add_subcommand("scan", "degree-d ideal scan over isotypic components");
    int degree = 6;
    int samples = 40;
    int degree_cap = salmon::kDefaultScanDegreeCap;
    scan->add_option("--degree", degree, "scan degree")->capture_default_str();
    scan->add_option("--dims", dims_str, "ambient dims a,b,c")->capture_default_str();
    scan->add_option("--samples", samples, "rank-4 samples per component")->capture_default_str();
    scan->add_option("--degree-cap", degree_cap,
                     "cost guard on the scan degree (scans beyond 6 may be infeasible)")
        ->capture_default_str();
    scan->fallthrough();

    auto* dims_cmd = app.add_subcommand("dims", "dimension queries (Weyl, Terracini, subspace)");
    std::string schur_str, kron_str, subspace_dim_str;
    int schur_n = 0;
    int terracini_r = 0;
    dims_cmd->add_option("--schur", schur_str, "partition, e.g. 3,1,1,1 (with --n)");
    dims_cmd->add_option("--n", schur_n, "vector space dimension for --schur");
    dims_cmd->add_option("--terracini", terracini_r, "projective dim of sigma_r (with --dims)");
    dims_cmd->add_option("--subspace", subspace_dim_str, "projective dim of Sub_{a',b',c'} (with --dims)");
    dims_cmd->add_option("--kron", kron_str, "Kronecker multiplicity of three partitions 'p1 p2 p3'");
    dims_cmd->add_option("--dims", dims_str, "ambient dims a,b,c")->capture_default_str();
    dims_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        salmon::set_thread_count(threads);

        if (*gen) {
            const salmon::Dims dims = parse_dims(dims_str);
            salmon::ModuleBasis basis = salmon::make_module_basis(module_name, dims);
            emit(out_path, salmon::emit_module_basis(basis));
            return 0;
        }

        if (*test) {
            salmon::Tensor3 t;
            if (use_friedland) {
                t = salmon::friedland_point();
            } else if (!in_path.empty()) {
                t = salmon::tensor_from_json(salmon::read_file(in_path));
            } else {
                throw salmon::input_error("test needs --in <tensor.json> or --friedland");
            }
            if (mode == "numeric")
                t = t.to_numeric();
            else if (mode != "exact")
                throw salmon::input_error("--mode must be exact or numeric");
            salmon::MembershipReport report = salmon::border_rank_le4_test(t, trials, seed, tol);
            emit(out_path, salmon::report_to_json(report));
            return 0;
        }

        if (*sample) {
            const salmon::Dims dims = parse_dims(dims_str);
            if ((secant_r > 0) + (!subspace_str.empty()) + generic != 1)
                throw salmon::input_error("sample needs exactly one of --secant r, --subspace a',b',c', --generic");
            if (secant_r > 0) {
                auto s = salmon::sample_secant(secant_r, dims, seed);
                emit(out_path, salmon::tensor_to_json(s.tensor, "secant", seed, secant_r));
            } else if (!subspace_str.empty()) {
                auto s = salmon::sample_subspace(parse_dims(subspace_str), dims, seed);
                emit(out_path, salmon::tensor_to_json(s.tensor, "subspace", seed));
            } else {
                emit(out_path, salmon::tensor_to_json(salmon::sample_generic(dims, seed), "generic", seed));
            }
            return 0;
        }

        if (*scan) {
            const salmon::Dims dims = parse_dims(dims_str);
            salmon::ScanResult result = salmon::ideal_scan(degree, dims, samples, seed, degree_cap);
            emit(out_path, salmon::scan_to_json(result));
            return 0;
        }

        if (*dims_cmd) {
            if (!schur_str.empty()) {
                if (schur_n < 1) throw salmon::input_error("--schur needs --n");
                std::cout << salmon::weyl_dimension(salmon::Partition::parse(schur_str), schur_n).get_str()
                          << "\n";
            } else if (terracini_r > 0) {
                std::cout << salmon::terracini_dim(terracini_r, parse_dims(dims_str), seed) << "\n";
            } else if (!subspace_dim_str.empty()) {
                std::cout << salmon::subspace_dim(parse_dims(subspace_dim_str), parse_dims(dims_str)) << "\n";
            } else if (!kron_str.empty()) {
                std::istringstream is(kron_str);
                std::string p1, p2, p3;
                if (!(is >> p1 >> p2 >> p3)) throw salmon::input_error("--kron needs three partitions");
                std::cout << salmon::kronecker_mult(salmon::Partition::parse(p1), salmon::Partition::parse(p2),
                                                    salmon::Partition::parse(p3))
                                 .get_str()
                          << "\n";
            } else {
                throw salmon::input_error("dims needs one of --schur, --terracini, --subspace, --kron");
            }
            return 0;
        }
    } catch (const salmon::contract_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const salmon::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
