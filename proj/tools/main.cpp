#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spc2/chevalley.hpp"
#include "spc2/render.hpp"

namespace {

using namespace spc2;

int cmd_compute(const std::string& decomp, Kind kind, OutputFormat fmt, bool use_oracle,
                long ell_check) {
    AnyClass cls;
    try {
        cls = parse_decomp(decomp, kind);
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const InvalidPart& e) {
        std::cerr << "invalid part: " << e.what() << '\n';
        return 3;
    }
    AdjointReport r =
        use_oracle ? oracle_report(cls) : std::visit([](const auto& c) { return report(c); }, cls);
    if (ell_check > 0 && r.ell != ell_check) {
        std::cerr << "rank mismatch: decomposition has ell = " << r.ell << ", expected "
                  << ell_check << '\n';
        return 3;
    }
    emit_rows({r}, fmt, std::cout);
    return 0;
}

template <typename Class>
bool verify_class(const Class& c, std::ostream& os) {
    AdjointReport r = report(c);
    OracleTypes o = oracle_types(c);
    struct Check {
        const char* name;
        const JordanType* expected;
        const JordanType* got;
    } checks[] = {
        {"type_gsc", &r.type_gsc, &o.gsc},
        {"type_gsc_mod_center", &r.type_derived, &o.gsc_mod_z},
        {"type_derived", &r.type_derived, &o.derived},
        {"type_gad", &r.type_gad, &o.gad},
    };
    bool ok = true;
    for (const auto& ch : checks) {
        if (*ch.expected != *ch.got) {
            ok = false;
            os << "FAIL ell=" << r.ell << " " << r.decomposition << " [" << ch.name
               << "]: expected " << render_type(*ch.expected) << ", got " << render_type(*ch.got)
               << '\n';
        }
    }
    if (ok) os << "ok   ell=" << r.ell << " " << r.decomposition << '\n';
    return ok;
}

int cmd_verify(long max_ell, std::optional<Kind> kind) {
    long classes = 0, failures = 0;
    std::ostringstream buf;
    for (long l = 1; l <= max_ell; ++l) {
        if (!kind || *kind == Kind::unipotent)
            for (const auto& c : enumerate_unip(l)) {
                ++classes;
                if (!verify_class(c, buf)) ++failures;
            }
        if (!kind || *kind == Kind::nilpotent)
            for (const auto& c : enumerate_nilp(l)) {
                ++classes;
                if (!verify_class(c, buf)) ++failures;
            }
    }
    std::cout << buf.str();
    std::cout << classes << " classes verified, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

std::string render_blocks(const JordanType& t) {
    if (t.empty()) return "0 (zero module)";
    std::string out;
    for (auto [s, m] : t.entries()) {
        if (!out.empty()) out += ", ";
        out += std::to_string(s);
        if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
}

int cmd_blocks(const std::string& op, Kind kind, const std::vector<long>& args) {
    for (long a : args)
        if (a <= 0) {
            std::cerr << "block sizes must be positive\n";
            return 2;
        }
    JordanType t;
    if (op == "tensor") {
        if (args.size() != 2) {
            std::cerr << "tensor takes exactly two sizes\n";
            return 2;
        }
        t = tensor(args[0], args[1], kind);
    } else if (op == "sym2" || op == "ext2") {
        if (args.size() != 1) {
            std::cerr << op << " takes exactly one size\n";
            return 2;
        }
        t = op == "sym2" ? sym2(args[0], kind) : ext2(args[0], kind);
    } else {
        std::cerr << "unknown operation: " << op << '\n';
        return 2;
    }
    std::cout << render_blocks(t) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordan block sizes of the adjoint action for symplectic groups in "
                 "characteristic 2"};
    app.require_subcommand(1);

    std::string kind_str, decomp, format_str = "csv", ell_str, op;
    long max_ell = 4, ell_check = 0;
    bool use_oracle = false;
    std::vector<long> block_args;

    auto* c_compute = app.add_subcommand("compute", "Report for a single class");
    c_compute->add_option("--kind", kind_str, "unipotent|nilpotent")->required();
    c_compute->add_option("--decomp", decomp, "class decomposition, e.g. \"W(2) + V(4)\"")
        ->required();
    c_compute->add_option("--format", format_str, "csv|md|latex|json");
    c_compute->add_flag("--oracle", use_oracle, "compute via the explicit matrix oracle");
    c_compute->add_option("--ell-check", ell_check, "fail unless the class has this rank");

    auto* c_table = app.add_subcommand("table", "Reports for all classes of the given ranks");
    c_table->add_option("--kind", kind_str, "unipotent|nilpotent")->required();
    auto* opt_ell = c_table->add_option("--ell", ell_str, "rank or range a..b");
    c_table->add_option("--ell-range", ell_str, "rank range a..b")->excludes(opt_ell);
    c_table->add_option("--format", format_str, "csv|md|latex|json");

    auto* c_verify = app.add_subcommand("verify", "Cross-check formulas against the oracle");
    c_verify->add_option("--max-ell", max_ell, "verify every class with ell up to this rank");
    c_verify->add_option("--kind", kind_str, "restrict to unipotent|nilpotent");

    auto* c_blocks = app.add_subcommand("blocks", "Single-block tensor/sym2/ext2 decompositions");
    c_blocks->add_option("op", op, "tensor|sym2|ext2")->required();
    c_blocks->add_option("--kind", kind_str, "unipotent|nilpotent")->required();
    c_blocks->add_option("args", block_args, "block sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_compute)
            return cmd_compute(decomp, parse_kind(kind_str), parse_format(format_str), use_oracle,
                               ell_check);
        if (*c_table) {
            if (ell_str.empty()) {
                std::cerr << "table requires --ell or --ell-range\n";
                return 2;
            }
            auto [lo, hi] = parse_range(ell_str);
            if (lo < 1 || hi < lo) {
                std::cerr << "invalid rank range\n";
                return 2;
            }
            emit_rows(table_rows(lo, hi, parse_kind(kind_str)), parse_format(format_str),
                      std::cout);
            return 0;
        }
        if (*c_verify) {
            if (max_ell < 1) {
                std::cerr << "--max-ell must be at least 1\n";
                return 2;
            }
            std::optional<Kind> k;
            if (!kind_str.empty()) k = parse_kind(kind_str);
            return cmd_verify(max_ell, k);
        }
        if (*c_blocks) return cmd_blocks(op, parse_kind(kind_str), block_args);
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const InvalidPart& e) {
        std::cerr << "invalid part: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 2;
}
