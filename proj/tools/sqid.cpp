// sqid: generate, verify and explore bilinear sum-of-squares identities
// built from twisted group algebras over (Z/2Z)^n.
//
// Exit codes: 0 success / verified, 1 verification failure, 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sqid/clifford.hpp"
#include "sqid/identity.hpp"
#include "sqid/pairs.hpp"

namespace {

using namespace sqid;

PairSets make_pair(const std::string& construction, int n, int l, int k, int thm2_k,
                   bool extended) {
    if (construction == "hurwitz-radon") return hurwitz_radon_pair(n);
    if (construction == "complement") return complement_pair(n);
    if (construction == "border") return border_pair(n);
    if (construction == "thm1")
        return thm1_pair(n, l, k, extended ? Thm1Variant::Extended : Thm1Variant::Base);
    if (construction == "thm2") return thm2_pair(n, thm2_k - 1);  // theorem k = kappa + 1
    throw std::invalid_argument("unknown construction: " + construction);
}

int cmd_generate(const std::string& construction, int n, int l, int k, int thm2_k, bool extended,
                 const std::string& twist_name, const std::string& format,
                 const std::string& output) {
    Twist twist = twist_name == "clifford" ? Twist::Clifford : Twist::Octonion;
    PairSets pair = make_pair(construction, n, l, k, thm2_k, extended);
    if (pair.degenerate)
        std::cerr << "warning: construction yields a very small B (s = " << pair.B.size()
                  << "); the identity is degenerate but valid\n";
    Identity id = build_identity(twist, pair.A, pair.B);
    VerificationReport rep = verify_symbolic(id);
    if (!rep.ok) {
        std::cerr << "error: generated identity failed symbolic verification\n";
        return 1;
    }

    std::string text;
    if (format == "json")
        text = to_json(id);
    else if (format == "latex")
        text = to_latex(id);
    else
        text = summary_text(id, true);

    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open " << output << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

int cmd_verify(const std::string& path, int trials, std::uint64_t seed) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    Identity id;
    try {
        id = identity_from_json(buf.str());
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    VerificationReport rep = verify_symbolic(id);
    bool numeric = rep.ok && verify_numeric(id, trials, seed);
    Triple t = triple_of(id);
    std::cout << "triple [" << t.r << "," << t.s << "," << t.N << "]: symbolic "
              << (rep.ok ? "ok" : "FAILED") << " (" << rep.quadruples_checked
              << " quadruples), numeric " << (numeric ? "ok" : "FAILED") << "\n";
    if (rep.failing)
        std::cout << "failing quadruple: x=" << rep.failing->x << " y=" << rep.failing->y
                  << " z=" << rep.failing->z << " t=" << rep.failing->t << "\n";
    return rep.ok && numeric ? 0 : 1;
}

int cmd_search(int n) {
    ElementSet best = max_hurwitzian_search(n);
    ElementSet table = hurwitzian_set(n);
    bool table_is_max = table.size() == best.size();
    std::cout << "n=" << n << ": maximum admissible-set cardinality " << best.size() << "\n";
    std::cout << "witness:";
    for (Elem x : best) std::cout << ' ' << x;
    std::cout << "\ntable set has cardinality " << table.size() << " and "
              << (table_is_max ? "attains" : "does NOT attain") << " the maximum\n";
    return 0;
}

int cmd_rho(unsigned long long N) {
    std::cout << rho(N) << "\n";
    return 0;
}

void print_triple(std::ostream& os, const Triple& t) {
    os << "[" << t.r << "," << t.s << "," << t.N << "]";
}

int cmd_table(int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        std::cout << "n=" << n << "\n";
        auto row = [&](const std::string& name, const PairSets& p,
                       const std::optional<Triple>& predicted) {
            Identity id = build_identity(Twist::Octonion, p.A, p.B);
            bool ok = verify_symbolic(id).ok;
            Triple t = triple_of(id);
            std::cout << "  " << name << ": constructed ";
            print_triple(std::cout, t);
            if (predicted) {
                std::cout << " predicted ";
                print_triple(std::cout, *predicted);
                std::cout << (t == *predicted ? " MATCH" : " MISMATCH");
            }
            std::cout << (ok ? " verified" : " FAILED") << "\n";
        };
        long long p2 = 1LL << n;
        Triple hr{rho(static_cast<unsigned long long>(p2)), p2, p2};
        if (n % 4 == 0) hr.r = 2 * n;  // the table set does not reach 2n+1 here
        row("hurwitz-radon", hurwitz_radon_pair(n), hr);
        if (n >= 2) row("complement", complement_pair(n), std::nullopt);
        if (n % 2 == 1 && n >= 5) row("border", border_pair(n), std::nullopt);
        if (n >= 5) {
            for (int k = 2; k <= std::min(n, 5); ++k)
                for (int l = 1; l < k; ++l) {
                    std::ostringstream name;
                    name << "thm1 l=" << l << " k=" << k;
                    row(name.str(), thm1_pair(n, l, k), predicted_triple_thm1(n, l, k));
                }
        }
        if (n % 2 == 1 && n >= 5) {
            int m = (n - 1) / 2;
            for (int k = 1; k <= m; ++k) {
                std::ostringstream name;
                name << "thm2 k=" << k;
                row(name.str(), thm2_pair(n, k - 1), predicted_triple_thm2(n, k));
            }
        }
    }
    return 0;
}

int cmd_clifford(int n, const std::string& case_name, std::uint64_t x, bool have_x,
                 const std::string& format) {
    if (have_x) {
        SignedPermMatrix g = build_G(n, x);
        if (format == "csv")
            std::cout << g.to_csv();
        else
            std::cout << g.to_triplets();
        return 0;
    }
    CliffordCase c;
    int rank;
    if (case_name == "2n") {
        c = CliffordCase::Cl0_2n;
        rank = 2 * n;
    } else if (case_name == "2n-1") {
        c = CliffordCase::Cl0_2n_minus1;
        rank = 2 * n - 1;
    } else if (case_name == "2n-2") {
        c = CliffordCase::Cl0_2n_minus2;
        rank = 2 * n - 2;
    } else {
        throw std::invalid_argument("unknown case: " + case_name);
    }
    ElementSet gens = generator_set(n, c);
    bool ok = verify_clifford_rep(n, gens);
    std::cout << "Cl(0," << rank << ") on R^" << (1 << n) << ": " << gens.size()
              << " generators, relations " << (ok ? "verified" : "FAILED") << "\n";
    std::cout << "generators:";
    for (Elem g : gens) std::cout << ' ' << g;
    std::cout << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sum-of-squares identities from twisted group algebras over (Z/2Z)^n"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "build and verify an identity");
    int n = 3, l = 1, k = 2, thm2_k = 1;
    bool extended = false;
    std::string construction = "hurwitz-radon", twist = "octonion", format = "text", output;
    gen->add_option("--n", n, "dimension")->required();
    gen->add_option("--construction", construction, "one of hurwitz-radon, complement, border, thm1, thm2")
        ->check(CLI::IsMember({"hurwitz-radon", "complement", "border", "thm1", "thm2"}));
    gen->add_option("--l", l, "thm1 parameter l");
    gen->add_option("--k", k, "thm1 parameter k / thm2 theorem parameter k");
    gen->add_flag("--extended", extended, "thm1: use the 2n+2-element set (n = 3 mod 4)");
    gen->add_option("--twist", twist)->check(CLI::IsMember({"octonion", "clifford"}));
    gen->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));
    gen->add_option("--output", output, "write to file instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "re-verify a stored identity");
    std::string path;
    int trials = 32;
    std::uint64_t seed = 1;
    ver->add_option("path", path, "identity JSON file")->required();
    ver->add_option("--trials", trials);
    ver->add_option("--seed", seed);

    // search
    auto* sea = app.add_subcommand("search", "exact maximum admissible-set search");
    int search_n = 4;
    sea->add_option("--n", search_n, "dimension, <= 6")->required();

    // clifford
    auto* cli = app.add_subcommand("clifford", "Clifford generators and G_x export");
    int cl_n = 3;
    std::string cl_case = "2n", cl_format = "triplets";
    std::uint64_t cl_x = 0;
    cli->add_option("--n", cl_n)->required();
    auto* xopt = cli->add_option("--x", cl_x, "export G_x for this element");
    cli->add_option("--case", cl_case, "generator family: 2n, 2n-1, 2n-2")
        ->check(CLI::IsMember({"2n", "2n-1", "2n-2"}));
    cli->add_option("--format", cl_format)->check(CLI::IsMember({"csv", "triplets"}));

    // rho
    auto* rh = app.add_subcommand("rho", "Hurwitz-Radon function");
    unsigned long long rho_N = 1;
    rh->add_option("N", rho_N)->required();

    // table
    auto* tab = app.add_subcommand("table", "predicted vs constructed triples");
    int n_max = 8;
    tab->add_option("--n-max", n_max, "largest dimension, <= 12");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_generate(construction, n, l, k, k, extended, twist, format, output);
        if (ver->parsed()) return cmd_verify(path, trials, seed);
        if (sea->parsed()) return cmd_search(search_n);
        if (cli->parsed()) return cmd_clifford(cl_n, cl_case, cl_x, xopt->count() > 0, cl_format);
        if (rh->parsed()) return cmd_rho(rho_N);
        if (tab->parsed()) {
            if (n_max > 12) throw std::invalid_argument("table: --n-max <= 12");
            return cmd_table(n_max);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
