#include "qgcat/cli/app.hpp"

#include "qgcat/category/modularity.hpp"
#include "qgcat/category/premodular.hpp"
#include "qgcat/cli/serialize.hpp"
#include "qgcat/cyclo/numeric.hpp"
#include "qgcat/lie/alcove.hpp"
#include "qgcat/rank/rank_gen.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

namespace qgcat::cli {

using category::PreModularData;
using cyclo::CycloNumber;

int exit_status_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::configuration:
    case ErrorKind::argument:
    case ErrorKind::label:
    case ErrorKind::precision: return exit_status::argument;
    case ErrorKind::level:
    case ErrorKind::scope:
    case ErrorKind::modularity: return exit_status::level;
    case ErrorKind::capacity: return exit_status::capacity;
    case ErrorKind::division_by_zero:
    case ErrorKind::invariant: return exit_status::invariant;
    }
    return exit_status::invariant;
}

std::pair<int, int> parse_level_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) throw ArgumentError("bad level '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int l = to_int(text);
        return {l, l};
    }
    const int a = to_int(text.substr(0, dots)), b = to_int(text.substr(dots + 2));
    if (a > b) throw ArgumentError("empty level range '" + text + "'");
    return {a, b};
}

namespace {

// Cell layout shared by the csv and table formats.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void write_table(const Table& t, Format f, std::ostream& out) {
    if (f == Format::csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
            out << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return;
    }
    std::vector<std::size_t> w(t.header.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.header[i].size();
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size()) out << std::string(w[i] - cells[i].size() + 2, ' ');
        }
        out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

bool all_zero_digits(const std::string& s) {
    return s.find_first_not_of("-0.") == std::string::npos;
}

// "a", "bi" or "a+bi" from the certified decimal parts.
std::string approx_text(const CycloNumber& x, int digits) {
    auto [re, im] = approx_parts(x, digits);
    const bool re0 = all_zero_digits(re), im0 = all_zero_digits(im);
    if (im0) return re0 ? "0" : re;
    if (re0) return im + "i";
    if (im[0] != '-') im = "+" + im;
    return re + im + "i";
}

std::string tuple_text(const std::vector<std::string>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + ")";
}

std::string fundamental_text(const lie::Weight& w) {
    std::vector<std::string> p;
    for (int c : w) p.push_back(std::to_string(c));
    return tuple_text(p);
}

std::string epsilon_text(const lie::RootSystem& rs, const lie::Weight& w) {
    if (!rs.has_epsilon_coordinates()) return "";
    std::vector<std::string> p;
    for (const auto& e : rs.epsilon_coordinates(w)) p.push_back(e.get_str());
    return tuple_text(p);
}

std::string label_text(const lie::RootSystem& rs, const lie::Weight& w) {
    const std::string e = epsilon_text(rs, w);
    return e.empty() ? fundamental_text(w) : fundamental_text(w) + " eps " + e;
}

json spec_json(const lie::LieType& t, const cyclo::QSpec& q) {
    return json{{"type", t.name()}, {"ell", q.ell()}, {"z", q.z()}, {"d", q.d()}, {"conductor", q.conductor()}};
}

category::BuildOptions build_options(const JobConfig& cfg) {
    category::BuildOptions o;
    o.large = cfg.large;
    return o;
}

std::uint64_t weyl_limit(const JobConfig& cfg) {
    return cfg.weyl_limit ? cfg.weyl_limit : lie::default_weyl_limit;
}

PreModularData build(const lie::RootSystem& rs, const JobConfig& cfg, int z) {
    PreModularData d = category::build_premodular(rs, cfg.ell, z, build_options(cfg));
    return cfg.sub ? category::integer_weight_subcategory(d) : d;
}

void cross_check_weyl(const lie::RootSystem& rs, const PreModularData& d, const JobConfig& cfg) {
    const auto w = category::s_matrix_weyl(rs, d.q, d.labels, weyl_limit(cfg));
    if (!(w == d.s)) throw Discordance("S from fusion and S from the Weyl sum differ");
}

category::Expectation expectation(const JobConfig& cfg, int z) {
    return cfg.sub ? category::expected_subcategory_modularity(cfg.type, cfg.ell, z)
                   : category::expected_modularity(cfg.type, cfg.ell, z);
}

bool concordant(category::Expectation e, bool modular) {
    if (e == category::Expectation::unknown) return true;
    return (e == category::Expectation::modular) == modular;
}

} // namespace

int cmd_alcove(const JobConfig& cfg, std::ostream& out) {
    lie::RootSystem rs(cfg.type);
    lie::Alcove alcove(rs, cfg.ell);
    const auto q = category::make_qspec(rs, cfg.ell, cfg.z);
    if (cfg.format == Format::json) {
        json labels = json::array();
        for (std::size_t i = 0; i < alcove.size(); ++i) {
            const auto& w = alcove.labels()[i];
            json l = label_to_json(rs, w);
            l["index"] = i;
            l["dim"] = cyclo_to_json(category::qdim(rs, q, w), cfg.digits);
            l["twist"] = cyclo_to_json(category::twist(rs, q, w), cfg.digits);
            labels.push_back(std::move(l));
        }
        out << json{{"spec", spec_json(cfg.type, q)}, {"labels", labels}}.dump(2) << "\n";
        return exit_status::ok;
    }
    Table t;
    t.header = {"index", "fundamental"};
    if (rs.has_epsilon_coordinates()) t.header.push_back("epsilon");
    t.header.insert(t.header.end(), {"dim", "twist"});
    for (std::size_t i = 0; i < alcove.size(); ++i) {
        const auto& w = alcove.labels()[i];
        std::vector<std::string> r{std::to_string(i), fundamental_text(w)};
        if (rs.has_epsilon_coordinates()) r.push_back(epsilon_text(rs, w));
        r.push_back(approx_text(category::qdim(rs, q, w), cfg.digits));
        r.push_back(approx_text(category::twist(rs, q, w), cfg.digits));
        t.rows.push_back(std::move(r));
    }
    write_table(t, cfg.format, out);
    return exit_status::ok;
}

int cmd_smatrix(const JobConfig& cfg, std::ostream& out) {
    lie::RootSystem rs(cfg.type);
    const PreModularData d = build(rs, cfg, cfg.z);
    if (cfg.cross_check) cross_check_weyl(rs, d, cfg);
    const std::size_t r = d.rank();
    if (cfg.format == Format::json) {
        json labels = json::array(), s = json::array();
        for (std::size_t i = 0; i < r; ++i) {
            labels.push_back(label_to_json(rs, d.labels[i]));
            json row = json::array();
            for (std::size_t j = 0; j < r; ++j) row.push_back(cyclo_to_json(d.s(i, j), cfg.digits));
            s.push_back(std::move(row));
        }
        json spec = spec_json(cfg.type, d.q);
        spec["subcategory"] = cfg.sub;
        out << json{{"spec", spec}, {"labels", labels}, {"S", s}}.dump(2) << "\n";
        return exit_status::ok;
    }
    Table t;
    if (cfg.format == Format::csv) {
        t.header = {"row", "col", "approx", "exact"};
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                t.rows.push_back({std::to_string(i), std::to_string(j), approx_text(d.s(i, j), cfg.digits), d.s(i, j).str()});
    } else {
        for (std::size_t i = 0; i < r; ++i) out << "# " << i << ": " << label_text(rs, d.labels[i]) << "\n";
        t.header.push_back("");
        for (std::size_t j = 0; j < r; ++j) t.header.push_back(std::to_string(j));
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::string> row{std::to_string(i)};
            for (std::size_t j = 0; j < r; ++j) row.push_back(approx_text(d.s(i, j), cfg.digits));
            t.rows.push_back(std::move(row));
        }
    }
    write_table(t, cfg.format, out);
    return exit_status::ok;
}

int cmd_verdict(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    lie::RootSystem rs(cfg.type);
    const std::vector<int> zs = cfg.all_z ? cyclo::admissible_z(cfg.ell) : std::vector<int>{cfg.z};
    std::unique_ptr<category::FusionTensor> fusion;
    json results = json::array();
    Table t;
    t.header = {"z", "modular", "det_nonzero", "obstructions", "expected", "known_unitary", "known_not_unitarizable",
                "dims_positive", "concordant"};
    int status = exit_status::ok;
    for (int z : zs) {
        if (!fusion) {
            category::check_compute_scope(cfg.type, build_options(cfg));
            fusion = std::make_unique<category::FusionTensor>(category::fusion_tensor(rs, cfg.ell));
        }
        PreModularData d = category::build_premodular(rs, cfg.ell, z, *fusion, build_options(cfg));
        if (cfg.sub) d = category::integer_weight_subcategory(d);
        if (cfg.cross_check) cross_check_weyl(rs, d, cfg);
        const auto v = category::modularity_check(d);
        const auto e = expectation(cfg, z);
        const auto u = category::unitarity_report(d);
        const bool ok = concordant(e, v.is_modular);
        if (!ok) {
            err << "discordance: " << cfg.type.name() << " ell=" << cfg.ell << " z=" << z << " computed "
                << (v.is_modular ? "modular" : "not-modular") << ", expected " << category::to_string(e) << "\n";
            status = exit_status::discordance;
        }
        json j = verdict_to_json(rs, d, v, e, u);
        j["z"] = z;
        j["rank"] = d.rank();
        j["concordant"] = ok;
        results.push_back(std::move(j));
        std::string obs;
        for (auto i : v.obstructions) obs += (obs.empty() ? "" : "; ") + label_text(rs, d.labels[i]);
        auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
        t.rows.push_back({std::to_string(z), yn(v.is_modular), yn(v.det_nonzero), obs, category::to_string(e),
                          yn(u.known_unitary), yn(u.known_not_unitarizable), yn(u.dims_positive), yn(ok)});
    }
    if (cfg.format == Format::json) {
        out << json{{"type", cfg.type.name()}, {"ell", cfg.ell}, {"subcategory", cfg.sub}, {"results", results}}.dump(2)
            << "\n";
    } else {
        write_table(t, cfg.format, out);
    }
    return status;
}

int cmd_rank(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    lie::RootSystem rs(cfg.type);
    const bool range = cfg.ell_last != cfg.ell;
    json rows = json::array();
    Table t;
    t.header = {"ell", "ell_m", "ell0", "parts", "rank", "alcove"};
    int status = exit_status::ok;
    for (int ell = cfg.ell; ell <= cfg.ell_last; ++ell) {
        std::size_t alcove = 0;
        try {
            alcove = lie::Alcove(rs, ell).size();
        } catch (const LevelError&) {
            if (!range) throw;
            continue; // empty alcove; not a category
        }
        const auto spec = rank::rank_spec_for(cfg.type, ell);
        const auto r = rank::rank_by_gf(cfg.type, ell);
        if (r != alcove) {
            err << "discordance: " << cfg.type.name() << " ell=" << ell << " generating function gives " << r
                << ", alcove has " << alcove << " labels\n";
            status = exit_status::discordance;
        }
        std::vector<std::string> parts;
        for (int p : spec.parts) parts.push_back(std::to_string(p));
        t.rows.push_back({std::to_string(ell), std::to_string(spec.ell_m), std::to_string(spec.ell0),
                          tuple_text(parts), std::to_string(r), std::to_string(alcove)});
        rows.push_back({{"ell", ell}, {"ell_m", spec.ell_m}, {"ell0", spec.ell0}, {"parts", spec.parts},
                        {"rank", r}, {"alcove", alcove}});
    }
    if (cfg.format == Format::json)
        out << json{{"type", cfg.type.name()}, {"rows", rows}}.dump(2) << "\n";
    else
        write_table(t, cfg.format, out);
    return status;
}

int cmd_category(const JobConfig& cfg, std::ostream& out) {
    if (cfg.format != Format::json) throw ArgumentError("category output is JSON only");
    lie::RootSystem rs(cfg.type);
    const PreModularData d = build(rs, cfg, cfg.z);
    if (cfg.cross_check) cross_check_weyl(rs, d, cfg);
    const auto v = category::modularity_check(d);
    const auto e = expectation(cfg, cfg.z);
    json doc = premodular_to_json(rs, d, cfg.digits, cfg.sub);
    doc["verdicts"] = verdict_to_json(rs, d, v, e, category::unitarity_report(d));
    out << doc.dump(2) << "\n";
    return concordant(e, v.is_modular) ? exit_status::ok : exit_status::discordance;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact data of the pre-modular categories C(g, ell, q) at q = exp(z pi i / ell)", "qgcat"};
    app.require_subcommand(1);

    std::string type_text, level_text, format_text, output_path;
    JobConfig cfg;
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};

    auto common = [&](CLI::App* sub, bool smatrix_like) {
        sub->add_option("type", type_text, "Lie type, e.g. A1, B2, G2")->required();
        sub->add_option("level", level_text, "level ell")->required();
        sub->add_option("--z", cfg.z, "q = exp(z pi i / ell), 0 < z < 2 ell, gcd(z, ell) = 1");
        sub->add_option("--format", format_text, "json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--digits", cfg.digits, "decimal digits of numeric companions")->check(CLI::Range(1, 200));
        sub->add_option("-o,--output", output_path, "write to a file instead of standard output");
        if (smatrix_like) {
            sub->add_flag("--sub", cfg.sub, "integer-weight subcategory");
            sub->add_flag("--large", cfg.large, "allow fusion and S for E types and classical rank >= 5");
            sub->add_option("--weyl-limit", cfg.weyl_limit, "largest Weyl group for the Weyl-sum S route");
            sub->add_flag("--cross-check", cfg.cross_check, "also compute S by the Weyl sum and compare");
        }
    };
    auto* alcove = app.add_subcommand("alcove", "labels with dimensions and twists");
    common(alcove, false);
    auto* smatrix = app.add_subcommand("smatrix", "S-matrix");
    common(smatrix, true);
    auto* verdict = app.add_subcommand("verdict", "modularity and unitarity verdicts");
    common(verdict, true);
    verdict->add_flag("--all-z", cfg.all_z, "every admissible z");
    auto* rank_cmd = app.add_subcommand("rank", "rank by generating function, checked against the alcove");
    rank_cmd->add_option("type", type_text, "Lie type")->required();
    rank_cmd->add_option("level", level_text, "level ell or range a..b")->required();
    rank_cmd->add_option("--format", format_text, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    rank_cmd->add_option("-o,--output", output_path, "write to a file instead of standard output");
    auto* category_cmd = app.add_subcommand("category", "full data as JSON");
    common(category_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_status::ok;
    } catch (const CLI::ParseError& e) {
        err << "qgcat: " << e.what() << "\nRun with --help for usage.\n";
        return exit_status::argument;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            err << "qgcat: cannot open '" << output_path << "' for writing\n";
            return exit_status::io;
        }
        sink = &file;
    }

    std::ostringstream buffer;
    int status = exit_status::ok;
    try {
        cfg.type = lie::LieType::parse(type_text);
        std::tie(cfg.ell, cfg.ell_last) = parse_level_range(level_text);
        CLI::App* chosen = app.get_subcommands().front();
        if (chosen != rank_cmd && cfg.ell != cfg.ell_last) throw ArgumentError("a level range is only accepted by rank");
        if (format_text.empty()) format_text = chosen == category_cmd ? "json" : "table";
        cfg.format = formats.at(format_text);
        if (chosen == alcove) status = cmd_alcove(cfg, buffer);
        else if (chosen == smatrix) status = cmd_smatrix(cfg, buffer);
        else if (chosen == verdict) status = cmd_verdict(cfg, buffer, err);
        else if (chosen == rank_cmd) status = cmd_rank(cfg, buffer, err);
        else status = cmd_category(cfg, buffer);
    } catch (const Error& e) {
        err << "qgcat: " << e.what() << "\n";
        return exit_status_for(e.kind());
    } catch (const Discordance& e) {
        err << "qgcat: discordance: " << e.what() << "\n";
        return exit_status::discordance;
    } catch (const std::bad_alloc&) {
        err << "qgcat: out of memory\n";
        return exit_status::capacity;
    }

    *sink << buffer.str();
    sink->flush();
    if (!*sink) {
        err << "qgcat: write failed\n";
        return exit_status::io;
    }
    return status;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"qgcat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qgcat::cli
