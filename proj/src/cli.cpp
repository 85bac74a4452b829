#include "cpdirac/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace cpdirac::cli {

namespace {

// ---------------------------------------------------------------------------
// json

Json witness_json(const Witness& w) {
    Json j;
    j["s"] = w.s ? Json(*w.s) : Json(nullptr);
    j["l"] = w.l ? Json(*w.l) : Json(nullptr);
    j["k"] = w.k ? Json(*w.k) : Json(nullptr);
    j["factor"] = w.factor.to_string();
    j["multiplicity"] = w.multiplicity.to_string();
    return j;
}

Json line_json(const SpectralLine& line, bool provenance) {
    Json j;
    j["lambda"] = line.eigenvalue;
    j["multiplicity"] = line.multiplicity.to_string();
    if (provenance) {
        Json ws = Json::array();
        for (const auto& w : line.witnesses) ws.push_back(witness_json(w));
        j["witnesses"] = std::move(ws);
    }
    return j;
}

Json spectrum_json(const Spectrum& spectrum, bool provenance) {
    Json arr = Json::array();
    for (const auto& line : spectrum.lines) arr.push_back(line_json(line, provenance));
    return arr;
}

Json counts_json(const SpectrumCounts& c) {
    Json arr = Json::array();
    for (const auto& [eigenvalue, mult] : c) {
        Json j;
        j["lambda"] = eigenvalue;
        j["multiplicity"] = mult.to_string();
        arr.push_back(std::move(j));
    }
    return arr;
}

Json config_json(const EmbeddingConfig& config) {
    Json j;
    j["d"] = config.d();
    j["m"] = config.m();
    j["q"] = config.q();
    j["r"] = config.r();
    return j;
}

std::string_view parity_name(CodimParity p) { return p == CodimParity::Odd ? "odd" : "even"; }

std::string witness_text(const Witness& w) {
    std::ostringstream os;
    if (w.s) os << "s=" << *w.s << ' ';
    if (w.l)
        os << "l=" << *w.l << " k=" << *w.k;
    else
        os << "kernel";
    os << " -> ";
    if (!(w.factor == BigNat(1))) os << w.factor.to_string() << 'x';
    os << w.multiplicity.to_string();
    return os.str();
}

// ---------------------------------------------------------------------------
// text tables

class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void left_align_first() { left_first_ = true; }

    // Numeric columns right-aligned; the last column left-aligned when
    // `ragged_last` (free text).
    void print(std::ostream& out, bool ragged_last = false) const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        for (const auto& row : rows_) {
            std::string text;
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) text += "  ";
                const bool last = i + 1 == row.size();
                if (last && ragged_last) {
                    text += row[i];
                } else if (i == 0 && left_first_) {
                    text += row[i] + std::string(width[i] - row[i].size(), ' ');
                } else {
                    text += std::string(width[i] - row[i].size(), ' ') + row[i];
                }
            }
            out << text << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
    bool left_first_ = false;
};

void print_spectrum_table(const Spectrum& spectrum, bool provenance, std::ostream& out) {
    std::vector<std::string> header{"eigenvalue", "multiplicity"};
    if (provenance) header.emplace_back("witnesses");
    TextTable table(header);
    for (const auto& line : spectrum.lines) {
        std::vector<std::string> row{std::to_string(line.eigenvalue), line.multiplicity.to_string()};
        if (provenance) {
            std::string ws;
            for (const auto& w : line.witnesses) ws += (ws.empty() ? "" : "; ") + witness_text(w);
            row.push_back(std::move(ws));
        }
        table.add(std::move(row));
    }
    table.print(out, provenance);
}

void print_spectrum_csv(const Spectrum& spectrum, std::ostream& out) {
    out << "eigenvalue,multiplicity\n";
    for (const auto& line : spectrum.lines) out << line.eigenvalue << ',' << line.multiplicity.to_string() << '\n';
}

void print_json(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

std::string verdict_banner(Verdict v) {
    switch (v) {
        case Verdict::Optimal: return "OPTIMAL";
        case Verdict::NotOptimal: return "NOT OPTIMAL";
        case Verdict::TheoremViolation: return "THEOREM VIOLATION";
    }
    return "?";
}

std::string optional_text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string counts_text(const SpectrumCounts& c) {
    std::string s;
    for (const auto& [e, m] : c) s += (s.empty() ? "" : " ") + std::to_string(e) + ":" + m.to_string();
    return s;
}

// ---------------------------------------------------------------------------
// parsing helpers

OutputFormat parse_format(const std::string& s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw UsageError("--format: expected table, csv or json, got '" + s + "'");
}

}  // namespace

// ---------------------------------------------------------------------------

Json to_json(const BaseSpectrumResult& result, bool provenance) {
    Json j;
    j["bundle"] = Json{{"d", result.bundle.d}, {"v", result.bundle.v}};
    j["cutoff"] = result.spectrum.cutoff;
    j["spectrum"] = spectrum_json(result.spectrum, provenance);
    return j;
}

Json to_json(const TwistedResult& result, bool provenance) {
    Json j;
    j["config"] = config_json(result.config);
    j["cutoff"] = result.spectrum.cutoff;
    j["spectrum"] = spectrum_json(result.spectrum, provenance);
    if (provenance) {
        Json parts = Json::array();
        for (const auto& s : decompose_normal_twist(result.config))
            parts.push_back(Json{{"s", s.s}, {"factor", s.factor.to_string()}, {"v", s.v}});
        j["decomposition"] = std::move(parts);
    }
    return j;
}

Json to_json(const BoundResult& result) {
    Json j;
    j["config"] = config_json(result.config);
    j["mu"] = result.mu.to_string();
    j["bound"] = result.bound.value;
    j["parity"] = parity_name(result.bound.parity);
    return j;
}

Json to_json(const SharpnessReport& report, bool provenance) {
    Json j;
    j["config"] = config_json(report.config);
    j["mu"] = report.mu.to_string();
    j["bound"] = report.bound.value;
    j["spectrum"] = spectrum_json(report.spectrum_below, provenance);
    j["verdict"] = to_string(report.verdict);
    j["mu_th_eigenvalue"] = report.mu_th_eigenvalue ? Json(*report.mu_th_eigenvalue) : Json(nullptr);
    j["margin"] = report.margin ? Json(*report.margin) : Json(nullptr);
    j["next_line"] = report.next_line ? line_json(*report.next_line, provenance) : Json(nullptr);
    if (provenance) {
        Json parts = Json::array();
        for (const auto& s : decompose_normal_twist(report.config))
            parts.push_back(Json{{"s", s.s}, {"factor", s.factor.to_string()}, {"v", s.v}});
        j["decomposition"] = std::move(parts);
        if (auto published = published_example_counts(report.config)) {
            const bool matches = *published == counts(report.spectrum_below);
            Json ref;
            ref["spectrum"] = counts_json(*published);
            ref["matches"] = matches;
            ref["note"] = matches ? "published worked example agrees with the decomposition count"
                                  : "published worked example lists different multiplicities; the counts "
                                    "above follow the binomial decomposition of the normal spinor bundle";
            j["published_example"] = std::move(ref);
        }
    }
    return j;
}

Json to_json(const std::vector<SharpnessReport>& reports, bool provenance) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, provenance));
    return Json{{"reports", std::move(arr)}};
}

void render(const BaseSpectrumResult& result, OutputFormat format, bool provenance, std::ostream& out) {
    switch (format) {
        case OutputFormat::Json: print_json(to_json(result, provenance), out); return;
        case OutputFormat::Csv: print_spectrum_csv(result.spectrum, out); return;
        case OutputFormat::Table:
            out << "bundle  d=" << result.bundle.d << " v=" << result.bundle.v << "\n"
                << "cutoff  " << result.spectrum.cutoff << "\n\n";
            print_spectrum_table(result.spectrum, provenance, out);
            return;
    }
}

void render(const TwistedResult& result, OutputFormat format, bool provenance, std::ostream& out) {
    switch (format) {
        case OutputFormat::Json: print_json(to_json(result, provenance), out); return;
        case OutputFormat::Csv: print_spectrum_csv(result.spectrum, out); return;
        case OutputFormat::Table:
            out << "config  " << to_string(result.config) << "\n"
                << "cutoff  " << result.spectrum.cutoff << "\n\n";
            print_spectrum_table(result.spectrum, provenance, out);
            return;
    }
}

void render(const BoundResult& result, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::Json: print_json(to_json(result), out); return;
        case OutputFormat::Csv:
            out << "d,m,q,r,mu,bound,parity\n"
                << result.config.d() << ',' << result.config.m() << ',' << result.config.q() << ','
                << result.config.r() << ',' << result.mu.to_string() << ',' << result.bound.value << ','
                << parity_name(result.bound.parity) << '\n';
            return;
        case OutputFormat::Table: {
            TextTable t({"config", to_string(result.config)});
            t.add({"mu", result.mu.to_string()});
            t.add({"bound", std::to_string(result.bound.value) + " (m-d " +
                                std::string(parity_name(result.bound.parity)) + ")"});
            t.left_align_first();
            t.print(out, true);
            return;
        }
    }
}

void render(const SharpnessReport& report, OutputFormat format, bool provenance, std::ostream& out) {
    switch (format) {
        case OutputFormat::Json: print_json(to_json(report, provenance), out); return;
        case OutputFormat::Csv: print_spectrum_csv(report.spectrum_below, out); return;
        case OutputFormat::Table: {
            TextTable t({"config", to_string(report.config)});
            t.add({"mu", report.mu.to_string()});
            t.add({"bound", std::to_string(report.bound.value) + " (m-d " +
                                std::string(parity_name(report.bound.parity)) + ")"});
            t.add({"mu-th eigenvalue", optional_text(report.mu_th_eigenvalue)});
            t.add({"margin", optional_text(report.margin)});
            t.add({"verdict", verdict_banner(report.verdict)});
            if (report.next_line)
                t.add({"next above bound",
                       std::to_string(report.next_line->eigenvalue) + " (x" +
                           report.next_line->multiplicity.to_string() + ")"});
            t.left_align_first();
            t.print(out, true);
            out << '\n';
            print_spectrum_table(report.spectrum_below, provenance, out);
            if (provenance) {
                if (auto published = published_example_counts(report.config)) {
                    const bool matches = *published == counts(report.spectrum_below);
                    out << "\npublished example: " << counts_text(*published)
                        << (matches ? " (agrees)" : " (differs from the decomposition count above)") << '\n';
                }
            }
            return;
        }
    }
}

void render(const std::vector<SharpnessReport>& reports, OutputFormat format, bool provenance,
            std::ostream& out) {
    if (format == OutputFormat::Json) {
        print_json(to_json(reports, provenance), out);
        return;
    }
    auto row = [](const SharpnessReport& r, bool csv) {
        return std::vector<std::string>{std::to_string(r.config.d()),
                                        std::to_string(r.config.m()),
                                        std::to_string(r.config.q()),
                                        std::to_string(r.config.r()),
                                        r.mu.to_string(),
                                        std::to_string(r.bound.value),
                                        r.mu_th_eigenvalue ? std::to_string(*r.mu_th_eigenvalue) : (csv ? "" : "-"),
                                        r.margin ? std::to_string(*r.margin) : (csv ? "" : "-"),
                                        csv ? std::string(to_string(r.verdict)) : verdict_banner(r.verdict)};
    };
    if (format == OutputFormat::Csv) {
        out << "d,m,q,r,mu,bound,mu_th_eigenvalue,margin,verdict\n";
        for (const auto& r : reports) {
            const auto cells = row(r, true);
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
            out << '\n';
        }
        return;
    }
    TextTable t({"d", "m", "q", "r", "mu", "bound", "mu-th", "margin", "verdict"});
    for (const auto& r : reports) t.add(row(r, false));
    t.print(out, true);
}

// ---------------------------------------------------------------------------

CliRequest parse(const std::vector<std::string>& args) {
    CLI::App app{"Spectra of twisted Spin^c Dirac operators on CP^d in CP^m", "cpdirac"};
    app.require_subcommand(1, 1);

    std::string format = "table";
    bool strict = false;
    bool provenance = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "table, csv or json");
        sub->add_flag("--provenance", provenance, "include (s, l, k) witnesses");
        sub->add_flag("--strict", strict, "exit 3 on a theorem violation");
    };

    std::int64_t d = 0, m = 0, q = 0, v = 0, cutoff = 0;
    std::int64_t d_min = 0, d_max = 0, m_min = 0, m_max = 0;

    auto* spectrum = app.add_subcommand("spectrum", "D^2 spectrum on CP^d with spinor bundle twisted by L^v");
    spectrum->add_option("--d", d, "complex dimension")->required();
    spectrum->add_option("--v", v, "twist exponent")->required();
    spectrum->add_option("--max", cutoff, "largest eigenvalue to list")->required();
    add_common(spectrum);

    auto* twisted = app.add_subcommand("twisted", "twisted Dirac spectrum of CP^d in CP^m");
    twisted->add_option("--d", d)->required();
    twisted->add_option("--m", m)->required();
    twisted->add_option("--q", q)->required();
    twisted->add_option("--max", cutoff, "largest eigenvalue to list")->required();
    add_common(twisted);

    auto* bound = app.add_subcommand("bound", "eigenvalue upper bound and Killing spinor count");
    bound->add_option("--d", d)->required();
    bound->add_option("--m", m)->required();
    bound->add_option("--q", q)->required();
    add_common(bound);

    auto* sharp = app.add_subcommand("sharpness", "decide whether the bound is attained");
    sharp->add_option("--d", d)->required();
    sharp->add_option("--m", m)->required();
    sharp->add_option("--q", q)->required();
    add_common(sharp);

    auto* sw = app.add_subcommand("sweep", "sharpness for every admissible q over a (d, m) grid");
    sw->add_option("--d-min", d_min)->required();
    sw->add_option("--d-max", d_max)->required();
    sw->add_option("--m-min", m_min)->required();
    sw->add_option("--m-max", m_max)->required();
    add_common(sw);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliRequest req;
    req.format = parse_format(format);
    req.strict = strict;
    req.provenance = provenance;

    if (*spectrum) {
        req.subcommand = Subcommand::Spectrum;
        req.bundle = make_bundle(d, v);
    } else if (*twisted) {
        req.subcommand = Subcommand::Twisted;
        req.config = validate(d, m, q);
    } else if (*bound) {
        req.subcommand = Subcommand::Bound;
        req.config = validate(d, m, q);
    } else if (*sharp) {
        req.subcommand = Subcommand::Sharpness;
        req.config = validate(d, m, q);
    } else {
        req.subcommand = Subcommand::Sweep;
        if (d_min < 1 || d_min > d_max || m_min > m_max)
            throw ConfigError(ConfigErrorKind::BadDimension, "sweep needs 1 <= d-min <= d-max and m-min <= m-max");
        req.d_range = {d_min, d_max};
        req.m_range = {m_min, m_max};
    }
    if ((req.subcommand == Subcommand::Spectrum || req.subcommand == Subcommand::Twisted) && cutoff < 0)
        throw ConfigError(ConfigErrorKind::BadCutoff, "--max must be nonnegative");
    req.cutoff = cutoff;
    return req;
}

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
    const bool prov = request.provenance;
    switch (request.subcommand) {
        case Subcommand::Spectrum:
            render(BaseSpectrumResult{*request.bundle, enumerate_base_spectrum(*request.bundle, request.cutoff)},
                   request.format, prov, out);
            return kSuccess;
        case Subcommand::Twisted:
            render(TwistedResult{*request.config, twisted_spectrum(*request.config, request.cutoff)},
                   request.format, prov, out);
            return kSuccess;
        case Subcommand::Bound:
            render(BoundResult{*request.config, killing_dimension(*request.config), estimate_bound(*request.config)},
                   request.format, out);
            return kSuccess;
        case Subcommand::Sharpness: {
            const SharpnessReport report = sharpness(*request.config);
            render(report, request.format, prov, out);
            if (report.verdict == Verdict::TheoremViolation) {
                err << "theorem violation at " << to_string(report.config) << '\n';
                if (request.strict) return kTheoremViolation;
            }
            return kSuccess;
        }
        case Subcommand::Sweep: {
            const auto reports = sweep(request.d_range, request.m_range);
            render(reports, request.format, prov, out);
            const auto violations = std::count_if(reports.begin(), reports.end(), [](const SharpnessReport& r) {
                return r.verdict == Verdict::TheoremViolation;
            });
            if (violations > 0) {
                err << violations << " theorem violation(s)\n";
                if (request.strict) return kTheoremViolation;
            }
            return kSuccess;
        }
    }
    return kSuccess;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliRequest request;
    try {
        request = parse(args);
    } catch (const HelpRequested& help) {
        out << help.what();
        return kSuccess;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kUsage;
    } catch (const ConfigError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kInvalidConfig;
    }
    return run(request, out, err);
}

}  // namespace cpdirac::cli
