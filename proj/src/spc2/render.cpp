#include "render.hpp"

#include <json.hpp>

#include "chevalley.hpp"

namespace spc2 {

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "md") return OutputFormat::md;
    if (s == "latex") return OutputFormat::latex;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format: " + s);
}

Kind parse_kind(const std::string& s) {
    if (s == "unipotent") return Kind::unipotent;
    if (s == "nilpotent") return Kind::nilpotent;
    throw std::invalid_argument("unknown kind: " + s);
}

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(s);
        return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

std::vector<AdjointReport> table_rows(long lo, long hi, Kind kind) {
    std::vector<AdjointReport> rows;
    for (long l = lo; l <= hi; ++l) {
        if (kind == Kind::unipotent)
            for (const auto& c : enumerate_unip(l)) rows.push_back(report(c));
        else
            for (const auto& c : enumerate_nilp(l)) rows.push_back(report(c));
    }
    return rows;
}

AdjointReport oracle_report(const AnyClass& cls) {
    return std::visit(
        [](const auto& c) {
            AdjointReport r = report(c);
            OracleTypes o = oracle_types(c);
            r.type_gsc = o.gsc;
            r.type_derived = o.derived;
            r.type_gad = o.gad;
            r.dim_cent_sc = r.type_gsc.num_blocks();
            r.dim_cent_ad = r.type_gad.num_blocks();
            return r;
        },
        cls);
}

namespace {

std::string beta_str(const AdjointReport& r) {
    return r.beta ? std::to_string(*r.beta) : "";
}

}  // namespace

void emit_rows(const std::vector<AdjointReport>& rows, OutputFormat fmt, std::ostream& os) {
    switch (fmt) {
        case OutputFormat::csv: {
            os << "ell,decomposition,type_V,type_gsc,type_derived,type_gad,alpha,beta,"
                  "dim_cent_sc,dim_cent_ad\n";
            for (const auto& r : rows) {
                auto q = [](const std::string& s) { return '"' + s + '"'; };
                os << r.ell << ',' << q(r.decomposition) << ',' << q(render_type(r.type_V)) << ','
                   << q(render_type(r.type_gsc)) << ',' << q(render_type(r.type_derived)) << ','
                   << q(render_type(r.type_gad)) << ',' << r.alpha << ',' << beta_str(r) << ','
                   << r.dim_cent_sc << ',' << r.dim_cent_ad << '\n';
            }
            break;
        }
        case OutputFormat::md: {
            os << "| ell | decomposition | type_V | type_gsc | type_derived | type_gad | alpha "
                  "| beta | dim_cent_sc | dim_cent_ad |\n";
            os << "|---|---|---|---|---|---|---|---|---|---|\n";
            for (const auto& r : rows) {
                os << "| " << r.ell << " | " << r.decomposition << " | " << render_type(r.type_V)
                   << " | " << render_type(r.type_gsc) << " | " << render_type(r.type_derived)
                   << " | " << render_type(r.type_gad) << " | " << r.alpha << " | " << beta_str(r)
                   << " | " << r.dim_cent_sc << " | " << r.dim_cent_ad << " |\n";
            }
            break;
        }
        case OutputFormat::latex: {
            os << "\\begin{tabular}{ccccccc}\n"
               << "$\\ell$ & class & $\\mathfrak{g}_{sc}$ & "
                  "$[\\mathfrak{g}_{ad},\\mathfrak{g}_{ad}]$ & $\\mathfrak{g}_{ad}$ & $\\alpha$ & "
                  "$\\beta$ \\\\\n\\hline\n";
            for (const auto& r : rows) {
                os << r.ell << " & $" << r.decomposition << "$ & $" << render_type(r.type_gsc)
                   << "$ & $" << render_type(r.type_derived) << "$ & $" << render_type(r.type_gad)
                   << "$ & " << r.alpha << " & " << beta_str(r) << " \\\\\n";
            }
            os << "\\end{tabular}\n";
            break;
        }
        case OutputFormat::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json o;
                o["ell"] = r.ell;
                o["decomposition"] = r.decomposition;
                o["type_V"] = render_type(r.type_V);
                o["type_gsc"] = render_type(r.type_gsc);
                o["type_derived"] = render_type(r.type_derived);
                o["type_gad"] = render_type(r.type_gad);
                o["alpha"] = r.alpha;
                if (r.beta)
                    o["beta"] = *r.beta;
                else
                    o["beta"] = nullptr;
                o["dim_cent_sc"] = r.dim_cent_sc;
                o["dim_cent_ad"] = r.dim_cent_ad;
                arr.push_back(std::move(o));
            }
            os << arr.dump(2) << '\n';
            break;
        }
    }
}

}  // namespace spc2
