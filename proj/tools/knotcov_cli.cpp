// knotcov: first homology of branched cyclic covers of 2-bridge knots of
// Seifert genus 1 or 2, computed in closed form from the Alexander
// polynomial and cross-checked against two brute-force pipelines.

#include "knotcov/catalog.hpp"
#include "knotcov/homology.hpp"
#include "knotcov/oracle.hpp"
#include "knotcov/result_record.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using knotcov::AbelianGroup;
using knotcov::AlexanderPoly;
using knotcov::Catalog;
using knotcov::HomologyResult;
using knotcov::Int;
using knotcov::KnotRecord;

Int parse_int(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument(std::string(what) + ": \"" + text +
                                    "\" is not an integer");
    }
}

struct Range {
    long lo = 0, hi = 0;
};

// "N" or "LO..HI", inclusive.
Range parse_range(const std::string& text, const char* what, long min_value) {
    Range r;
    try {
        std::size_t dots = text.find("..");
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stol(text);
        } else {
            r.lo = std::stol(text.substr(0, dots));
            r.hi = std::stol(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": \"" + text +
                                    "\" is not N or LO..HI");
    }
    if (r.lo > r.hi)
        throw std::invalid_argument(std::string(what) + ": empty range " + text);
    if (r.lo < min_value)
        throw std::invalid_argument(std::string(what) + ": values must be >= " +
                                    std::to_string(min_value));
    return r;
}

Catalog resolve_catalog(const std::string& spec) {
    if (spec.empty() || spec == "default") return knotcov::default_catalog();
    return knotcov::load_catalog(spec);
}

struct KnotOptions {
    std::string knot;
    int genus = 0;
    std::string a, b;
    std::string catalog;

    void attach(CLI::App* cmd) {
        cmd->add_option("--knot", knot, "knot name from the catalog");
        cmd->add_option("--genus", genus, "Seifert genus of an inline knot (1 or 2)");
        cmd->add_option("--a", a, "leading coefficient a of the genus-2 polynomial");
        cmd->add_option("--b", b, "coefficient b of the polynomial");
        cmd->add_option("--catalog", catalog,
                        "catalog file, or \"default\" for the bundled one");
    }
};

struct Selection {
    std::string knot_name;  // empty when inline
    std::string display;
    AlexanderPoly poly;
};

Selection resolve_knot(const KnotOptions& opt) {
    if (!opt.knot.empty()) {
        if (opt.genus != 0 || !opt.a.empty() || !opt.b.empty())
            throw std::invalid_argument("--knot excludes --genus/--a/--b");
        Catalog cat = resolve_catalog(opt.catalog);
        const KnotRecord* r = cat.find(opt.knot);
        if (!r)
            throw std::invalid_argument("unknown knot \"" + opt.knot +
                                        "\" (see `knotcov catalog list`)");
        std::ostringstream d;
        d << "knot " << r->name << " (genus " << r->poly.genus();
        if (r->poly.genus() == 2) d << ", a = " << r->poly.a();
        d << ", b = " << r->poly.b() << ")";
        return Selection{r->name, d.str(), r->poly};
    }
    if (opt.genus == 0)
        throw std::invalid_argument(
            "specify a knot: --knot NAME, or --genus 1 --b B, or --genus 2 --a A --b B");
    if (opt.genus != 1 && opt.genus != 2)
        throw std::invalid_argument("--genus must be 1 or 2");
    if (opt.b.empty()) throw std::invalid_argument("--b is required for an inline knot");
    Int b = parse_int(opt.b, "--b");
    if (opt.genus == 1) {
        if (!opt.a.empty())
            throw std::invalid_argument("--a applies to genus 2 only");
        std::ostringstream d;
        d << "inline knot (genus 1, b = " << b << ")";
        return Selection{"", d.str(), AlexanderPoly::genus1(b)};
    }
    if (opt.a.empty()) throw std::invalid_argument("--a is required for genus 2");
    Int a = parse_int(opt.a, "--a");
    std::ostringstream d;
    d << "inline knot (genus 2, a = " << a << ", b = " << b << ")";
    return Selection{"", d.str(), AlexanderPoly::genus2(a, b)};
}

std::vector<unsigned> resolve_covers(const std::string& n_spec, long n_max) {
    if (!n_spec.empty() && n_max != 0)
        throw std::invalid_argument("give either --n or --n-max, not both");
    Range r;
    if (!n_spec.empty()) {
        r = parse_range(n_spec, "--n", 1);
    } else if (n_max != 0) {
        if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
        r = Range{1, n_max};
    } else {
        throw std::invalid_argument("specify --n N, --n LO..HI, or --n-max N");
    }
    std::vector<unsigned> ns;
    for (long n = r.lo; n <= r.hi; ++n) ns.push_back(static_cast<unsigned>(n));
    return ns;
}

void require_format(const std::string& format) {
    if (format != "table" && format != "records")
        throw std::invalid_argument("--format must be \"table\" or \"records\"");
}

std::vector<std::pair<std::string, bool>> check_flags(const knotcov::CrossCheckReport& rep) {
    std::vector<std::pair<std::string, bool>> flags;
    flags.emplace_back("groups_agree", rep.groups_agree);
    if (rep.lemma_ok) flags.emplace_back("lemma_decomposition", *rep.lemma_ok);
    if (rep.det_identity_ok) flags.emplace_back("determinant_identity", *rep.det_identity_ok);
    if (rep.exact_sequence && rep.exact_sequence->applicable)
        flags.emplace_back("exact_sequence_order", rep.exact_sequence->pass);
    return flags;
}

knotcov::ResultRecord make_record(const Selection& sel, const HomologyResult& h,
                                  unsigned n,
                                  std::optional<std::vector<std::pair<std::string, bool>>> checks) {
    knotcov::ResultRecord r;
    r.knot = sel.knot_name;
    r.genus = sel.poly.genus();
    if (r.genus == 2) r.a = sel.poly.a();
    r.b = sel.poly.b();
    r.n = n;
    r.group = h.group;
    r.certificate = h.certificate;
    r.checks = std::move(checks);
    return r;
}

int run_compute(const KnotOptions& kopt, const std::string& n_spec, long n_max,
                const std::string& format, bool check) {
    require_format(format);
    Selection sel = resolve_knot(kopt);
    std::vector<unsigned> ns = resolve_covers(n_spec, n_max);
    bool failed = false;
    const bool human = (format == "table");
    if (human) std::cout << sel.display << "\n";
    std::size_t n_width = std::to_string(ns.back()).size();
    for (unsigned n : ns) {
        HomologyResult h = knotcov::homology(sel.poly, n);
        std::optional<std::vector<std::pair<std::string, bool>>> flags;
        bool case_ok = h.certificate.violations.empty();
        if (check) {
            auto rep = knotcov::cross_check(sel.poly, n);
            flags = check_flags(rep);
            case_ok = case_ok && rep.all_ok();
        }
        failed = failed || !case_ok;
        if (human) {
            std::string n_str = std::to_string(n);
            std::cout << "n = " << std::string(n_width - n_str.size(), ' ') << n_str
                      << "   H1 = " << h.group.to_string();
            if (check) std::cout << "   checks: " << (case_ok ? "ok" : "FAILED");
            std::cout << "\n";
            for (const std::string& v : h.certificate.violations)
                std::cout << "    violation: " << v << "\n";
        } else {
            std::cout << emit_record(make_record(sel, h, n, std::move(flags))) << "\n";
        }
    }
    return failed ? 1 : 0;
}

int run_table(const KnotOptions& kopt, long n_max, const std::string& format) {
    require_format(format);
    if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
    Selection sel = resolve_knot(kopt);
    std::vector<std::string> ns, alphas, betas;
    for (long n = 1; n <= n_max; ++n) {
        HomologyResult h = knotcov::homology(sel.poly, static_cast<unsigned>(n));
        auto [alpha, beta] = knotcov::table_pair(h.certificate);
        ns.push_back(std::to_string(n));
        alphas.push_back(alpha.str());
        betas.push_back(beta.str());
    }
    if (format == "records") {
        for (std::size_t i = 0; i < ns.size(); ++i) {
            nlohmann::ordered_json j;
            if (!sel.knot_name.empty()) j["knot"] = sel.knot_name;
            j["n"] = std::stol(ns[i]);
            j["alpha"] = alphas[i];
            j["beta"] = betas[i];
            std::cout << j.dump() << "\n";
        }
        return 0;
    }
    std::cout << sel.display << ": cover invariants for n = 1.." << n_max;
    if (sel.poly.genus() == 1)
        std::cout << "  [genus-1 pair: odd n gives (Z_alpha)^2, even n gives "
                     "Z_beta + Z_{(4b-1)beta}]";
    std::cout << "\n";
    auto print_row = [&](const char* label, const std::vector<std::string>& cells) {
        std::cout << label;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::size_t width = std::max({ns[i].size(), alphas[i].size(), betas[i].size()});
            std::cout << "  " << std::string(width - cells[i].size(), ' ') << cells[i];
        }
        std::cout << "\n";
    };
    print_row("n    ", ns);
    print_row("alpha", alphas);
    print_row("beta ", betas);
    return 0;
}

void describe_failure(const knotcov::CrossCheckReport& rep) {
    const AlexanderPoly& p = rep.poly;
    std::cout << "MISMATCH: genus " << p.genus();
    if (p.genus() == 2) std::cout << ", a = " << p.a();
    std::cout << ", b = " << p.b() << ", n = " << rep.n << "\n";
    std::cout << "  closed form   : " << rep.closed_form.group.to_string() << "\n";
    std::cout << "  B(n) pipeline : " << rep.via_bn.to_string() << "\n";
    std::cout << "  circulant     : " << rep.via_circulant.to_string() << "\n";
    if (rep.lemma_ok)
        std::cout << "  lemma decomposition  : " << (*rep.lemma_ok ? "ok" : "FAILED") << "\n";
    if (rep.det_identity_ok)
        std::cout << "  determinant identity : " << (*rep.det_identity_ok ? "ok" : "FAILED")
                  << "\n";
    if (rep.exact_sequence) {
        std::cout << "  exact sequence order : ";
        if (!rep.exact_sequence->applicable)
            std::cout << "not applicable (" << rep.exact_sequence->note << ")";
        else
            std::cout << (rep.exact_sequence->pass ? "ok" : "FAILED");
        std::cout << "\n";
    }
    for (const std::string& v : rep.closed_form.certificate.violations)
        std::cout << "  violation: " << v << "\n";
    const auto& inter = rep.closed_form.certificate.intermediates;
    if (!inter.empty()) {
        std::cout << "  certificate   :";
        for (const auto& [name, v] : inter) std::cout << " " << name << " = " << v;
        std::cout << "\n";
    }
}

int run_verify(int genus, const std::string& a_range, const std::string& b_range,
               long n_max, const std::string& catalog, bool inject_fault) {
    if (n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
    std::vector<std::pair<std::string, AlexanderPoly>> cases;
    std::ostringstream header;
    if (!a_range.empty() || !b_range.empty()) {
        if (genus == 0) genus = 2;
        if (genus == 2) {
            if (a_range.empty() || b_range.empty())
                throw std::invalid_argument(
                    "genus-2 sweeps need both --a-range and --b-range");
            Range ra = parse_range(a_range, "--a-range", std::numeric_limits<long>::min());
            Range rb = parse_range(b_range, "--b-range", std::numeric_limits<long>::min());
            for (long a = ra.lo; a <= ra.hi; ++a) {
                if (a == 0) continue;
                for (long b = rb.lo; b <= rb.hi; ++b) {
                    std::ostringstream d;
                    d << "a = " << a << ", b = " << b;
                    cases.emplace_back(d.str(), AlexanderPoly::genus2(a, b));
                }
            }
            header << "genus-2 sweep: a in [" << ra.lo << "," << ra.hi
                   << "] excluding 0, b in [" << rb.lo << "," << rb.hi << "]";
        } else {
            if (!a_range.empty())
                throw std::invalid_argument("genus-1 sweeps take --b-range only");
            Range rb = parse_range(b_range, "--b-range", std::numeric_limits<long>::min());
            for (long b = rb.lo; b <= rb.hi; ++b) {
                if (b == 0) continue;
                std::ostringstream d;
                d << "b = " << b;
                cases.emplace_back(d.str(), AlexanderPoly::genus1(b));
            }
            header << "genus-1 sweep: b in [" << rb.lo << "," << rb.hi << "] excluding 0";
        }
    } else {
        Catalog cat = resolve_catalog(catalog);
        for (const KnotRecord& r : cat.records) cases.emplace_back(r.name, r.poly);
        header << "catalog sweep: " << cases.size() << " knots";
    }
    if (cases.empty()) throw std::invalid_argument("verification sweep is empty");
    std::cout << "verify: " << header.str() << ", n = 1.." << n_max << "\n";
    if (inject_fault)
        std::cout << "fault injection active: first case will be perturbed\n";
    std::size_t checked = 0, failures = 0;
    bool first = true;
    for (const auto& [display, poly] : cases) {
        for (long n = 1; n <= n_max; ++n) {
            auto rep = knotcov::cross_check(poly, static_cast<unsigned>(n));
            if (inject_fault && first) {
                // deliberate perturbation of the closed-form side, used to
                // demonstrate that a disagreement is caught and reported
                rep.closed_form.group.torsion.push_back(2);
                rep.groups_agree = false;
                first = false;
            }
            ++checked;
            if (!rep.all_ok()) {
                ++failures;
                describe_failure(rep);
            }
        }
    }
    std::cout << "checked " << checked << (checked == 1 ? " cover" : " covers") << " of "
              << cases.size() << (cases.size() == 1 ? " knot: " : " knots: ");
    if (failures == 0)
        std::cout << "all agree\n";
    else
        std::cout << failures << (failures == 1 ? " mismatch\n" : " mismatches\n");
    return failures == 0 ? 0 : 1;
}

int run_catalog_list(const std::string& catalog) {
    Catalog cat = resolve_catalog(catalog);
    std::size_t name_w = 4;
    for (const KnotRecord& r : cat.records) name_w = std::max(name_w, r.name.size());
    for (const KnotRecord& r : cat.records) {
        std::cout << r.name << std::string(name_w - r.name.size() + 2, ' ') << "genus "
                  << r.poly.genus();
        if (r.poly.genus() == 2) std::cout << "  a = " << r.poly.a();
        std::cout << "  b = " << r.poly.b();
        if (!r.slope.empty()) std::cout << "  slope " << r.slope;
        if (!r.source.empty()) std::cout << "  (" << r.source << ")";
        std::cout << "\n";
    }
    std::cout << cat.records.size() << " knots\n";
    return 0;
}

int run_catalog_validate(const std::string& catalog) {
    if (catalog.empty() || catalog == "default") {
        std::cout << "bundled catalog OK: " << knotcov::default_catalog().records.size()
                  << " records\n";
        return 0;
    }
    Catalog cat = knotcov::load_catalog(catalog);
    std::cout << catalog << " OK: " << cat.records.size() << " records\n";
    return 0;
}

int run_catalog_add(const std::string& catalog, const std::string& name, int genus,
                    const std::string& a, const std::string& b, const std::string& slope,
                    const std::string& source) {
    if (catalog.empty() || catalog == "default")
        throw std::invalid_argument(
            "catalog add writes to a file: pass --catalog PATH (the bundled catalog is "
            "read-only)");
    if (name.empty()) throw std::invalid_argument("--name is required");
    if (genus != 1 && genus != 2) throw std::invalid_argument("--genus must be 1 or 2");
    if (b.empty()) throw std::invalid_argument("--b is required");
    if (genus == 1 && !a.empty()) throw std::invalid_argument("--a applies to genus 2 only");
    if (genus == 2 && a.empty()) throw std::invalid_argument("--a is required for genus 2");
    AlexanderPoly poly = (genus == 1)
                             ? AlexanderPoly::genus1(parse_int(b, "--b"))
                             : AlexanderPoly::genus2(parse_int(a, "--a"), parse_int(b, "--b"));
    KnotRecord rec{name, std::move(poly), slope, source};
    knotcov::append_record(catalog, rec);
    std::cout << "added " << name << " to " << catalog << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "first homology of branched cyclic covers of 2-bridge knots "
        "(Seifert genus 1 and 2)"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand(
        "compute", "compute H1 of the n-fold covers of one knot");
    KnotOptions compute_knot;
    compute_knot.attach(compute);
    std::string compute_n;
    long compute_n_max = 0;
    std::string compute_format = "table";
    bool compute_check = false;
    compute->add_option("--n", compute_n, "cover degree N, or range LO..HI");
    compute->add_option("--n-max", compute_n_max, "cover degrees 1..N");
    compute->add_option("--format", compute_format, "output format: table or records");
    compute->add_flag("--check", compute_check,
                      "cross-check each cover against the brute-force pipelines");

    auto* table = app.add_subcommand(
        "table", "print the (alpha, beta) invariant table of one knot");
    KnotOptions table_knot;
    table_knot.attach(table);
    long table_n_max = 12;
    std::string table_format = "table";
    table->add_option("--n-max", table_n_max, "largest cover degree (default 12)");
    table->add_option("--format", table_format, "output format: table or records");

    auto* verify = app.add_subcommand(
        "verify", "cross-validate closed forms against brute force over a sweep");
    int verify_genus = 0;
    std::string verify_a_range, verify_b_range, verify_catalog;
    long verify_n_max = 12;
    bool inject_fault = false;
    verify->add_option("--genus", verify_genus, "family to sweep (default 2)");
    verify->add_option("--a-range", verify_a_range, "genus-2 sweep LO..HI for a");
    verify->add_option("--b-range", verify_b_range, "sweep LO..HI for b");
    verify->add_option("--n-max", verify_n_max, "check n = 1..N (default 12)");
    verify->add_option("--catalog", verify_catalog,
                       "verify every knot of this catalog instead of a sweep");
    verify->add_flag("--inject-fault", inject_fault)->group("");

    auto* catalog = app.add_subcommand("catalog", "inspect or extend knot catalogs");
    catalog->require_subcommand(1);
    auto* cat_list = catalog->add_subcommand("list", "list the knots of a catalog");
    auto* cat_validate = catalog->add_subcommand("validate", "parse a catalog and report");
    auto* cat_add = catalog->add_subcommand("add", "append one knot to a catalog file");
    std::string cat_path_list, cat_path_validate, cat_path_add;
    cat_list->add_option("--catalog", cat_path_list,
                         "catalog file, or \"default\" for the bundled one");
    cat_validate->add_option("--catalog", cat_path_validate, "catalog file to validate");
    cat_add->add_option("--catalog", cat_path_add, "catalog file to append to");
    std::string add_name, add_a, add_b, add_slope, add_source;
    int add_genus = 0;
    cat_add->add_option("--name", add_name, "unique knot name");
    cat_add->add_option("--genus", add_genus, "Seifert genus (1 or 2)");
    cat_add->add_option("--a", add_a, "genus-2 coefficient a");
    cat_add->add_option("--b", add_b, "coefficient b");
    cat_add->add_option("--slope", add_slope, "2-bridge fraction, informational");
    cat_add->add_option("--source", add_source, "free-form provenance note");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute)
            return run_compute(compute_knot, compute_n, compute_n_max, compute_format,
                               compute_check);
        if (*table) return run_table(table_knot, table_n_max, table_format);
        if (*verify)
            return run_verify(verify_genus, verify_a_range, verify_b_range, verify_n_max,
                              verify_catalog, inject_fault);
        if (*cat_list) return run_catalog_list(cat_path_list);
        if (*cat_validate) return run_catalog_validate(cat_path_validate);
        if (*cat_add)
            return run_catalog_add(cat_path_add, add_name, add_genus, add_a, add_b,
                                   add_slope, add_source);
    } catch (const knotcov::CatalogError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
