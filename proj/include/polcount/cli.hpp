#pragma once

// Command-line front end. run_cli() is the whole program; tools/polcount.cpp
// only forwards argv and the standard streams.
//
// Exit codes: 0 success, 2 usage or domain error, 3 I/O error (cache),
// 4 inconclusive verification, 1 internal consistency failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polcount/chevalley_weil.hpp"
#include "polcount/component_catalog.hpp"
#include "polcount/error.hpp"
#include "polcount/siegel.hpp"
#include "polcount/unit_signatures.hpp"

namespace polcount::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, csv };

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_io = 3;
inline constexpr int exit_inconclusive = 4;

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline Json big_to_json(const mpz_class& v) {
    if (v.fits_ulong_p()) return Json(static_cast<std::uint64_t>(v.get_ui()));
    return Json(v.get_str());
}

inline std::string join(const std::vector<std::int64_t>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

struct Run {
    std::int64_t first;
    std::int64_t last;
    std::int64_t value;
};

inline std::vector<Run> runs(const std::vector<std::int64_t>& v, std::size_t from) {
    std::vector<Run> out;
    for (std::size_t i = from; i < v.size(); ++i) {
        const auto idx = static_cast<std::int64_t>(i);
        if (!out.empty() && out.back().value == v[i]) {
            out.back().last = idx;
        } else {
            out.push_back({idx, idx, v[i]});
        }
    }
    return out;
}

inline constexpr std::int64_t run_length_threshold = 30;

// "(b; n_1, ..., n_{p-1})", with value^count runs when p is large.
inline std::string tuple_text(const EigenTuple& t) {
    std::string s = "(" + std::to_string(t.b()) + ";";
    if (t.p() > run_length_threshold) {
        bool first = true;
        for (const Run& r : runs(t.dims(), 1)) {
            s += first ? " " : ", ";
            first = false;
            s += std::to_string(r.value) + "^" + std::to_string(r.last - r.first + 1);
        }
    } else {
        for (std::int64_t i = 1; i < t.p(); ++i) s += (i == 1 ? " " : ", ") + std::to_string(t.at(i));
    }
    return s + ")";
}

inline Json pi_json(const PiClass& pi) {
    Json j = Json::object();
    if (const auto* k = std::get_if<KnownPi>(&pi)) {
        j["known"] = big_to_json(k->value);
    } else {
        j["unknown"] = to_string(std::get<UnknownPi>(pi).reason);
    }
    return j;
}

inline Json component_json(const ComponentData& d) {
    Json j;
    j["p"] = d.p();
    j["n"] = d.tuple.dims();
    j["b"] = d.b;
    j["c"] = d.c;
    j["dim"] = d.dimension ? Json(*d.dimension) : Json(nullptr);
    j["pi"] = pi_json(d.pi);
    if (d.profile) j["profile"] = *d.profile;
    return j;
}

inline Json p2_summary_json() {
    Json j;
    j["p"] = 2;
    j["n"] = Json::array();
    j["b"] = nullptr;
    j["c"] = nullptr;
    j["dim"] = nullptr;
    j["pi"] = pi_json(KnownPi{1});
    return j;
}

inline std::string component_csv(const ComponentData& d) {
    std::ostringstream os;
    os << d.p() << ',' << d.b << ',' << d.c << ',' << (d.dimension ? std::to_string(*d.dimension) : "n/a") << ','
       << to_string(d.pi) << ',' << join(d.tuple.dims(), ";") << ',' << (d.profile ? join(*d.profile, ";") : "");
    return os.str();
}

inline std::string component_text(const ComponentData& d) {
    std::ostringstream os;
    os << "p=" << d.p() << "  b=" << d.b << "  c=" << d.c << "  dim="
       << (d.dimension ? std::to_string(*d.dimension) : "n/a") << "  pi=" << to_string(d.pi) << "  n="
       << tuple_text(d.tuple);
    if (d.profile) os << "  profile=[" << join(*d.profile, ",") << "]";
    return os.str();
}

// ---- cache ---------------------------------------------------------------

inline const char* cache_section(UnitMethod m) { return m == UnitMethod::saturated ? "u" : "u_cyclotomic"; }

inline Json read_cache(const std::string& path) {
    if (!std::filesystem::exists(path)) return Json::object();
    std::ifstream in(path);
    if (!in) throw io_error("cannot read cache " + path);
    try {
        Json j = Json::parse(in);
        if (!j.is_object()) throw io_error("cache " + path + " is not a JSON object");
        return j;
    } catch (const Json::exception& e) {
        throw io_error("cannot parse cache " + path + ": " + e.what());
    }
}

inline void write_cache_atomically(const std::string& path, const Json& j) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw io_error("cannot write cache " + path);
        out << j.dump(2) << '\n';
        if (!out) throw io_error("cannot write cache " + path);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw io_error("cannot replace cache " + path);
    }
}

inline std::optional<UnitSignatureReport> cached_report(const Json& cache, std::int64_t p, UnitMethod m) {
    const char* sec = cache_section(m);
    if (!cache.contains(sec)) return std::nullopt;
    const Json& table = cache[sec];
    const std::string key = std::to_string(p);
    if (!table.is_object() || !table.contains(key)) return std::nullopt;
    const Json& e = table[key];
    try {
        UnitSignatureReport r;
        r.p = p;
        r.method = m;
        r.rank = e.at("rank").get<std::size_t>();
        r.u = mpz_class(e.at("u").is_string() ? e.at("u").get<std::string>()
                                               : std::to_string(e.at("u").get<std::uint64_t>()));
        r.conditional = p != 2 && m == UnitMethod::cyclotomic;
        const std::int64_t h = p == 2 ? 0 : (p - 1) / 2;
        mpz_class expect;
        if (static_cast<std::int64_t>(r.rank) > h) throw io_error("bad rank");
        mpz_ui_pow_ui(expect.get_mpz_t(), 2, static_cast<unsigned long>(h - static_cast<std::int64_t>(r.rank)));
        if (expect != r.u) throw io_error("cache entry for p=" + key + " is inconsistent");
        return r;
    } catch (const Json::exception&) {
        throw io_error("malformed cache entry for p=" + key);
    }
}

// ---- subcommands ---------------------------------------------------------

struct UOptions {
    std::optional<std::int64_t> max_prime;
    std::optional<std::int64_t> single;
    std::string cache_path;
    std::string method = "saturated";
};

inline int cmd_u(const UOptions& o, Format fmt, std::ostream& out) {
    const UnitMethod method = o.method == "cyclotomic" ? UnitMethod::cyclotomic : UnitMethod::saturated;
    std::vector<std::int64_t> primes;
    if (o.single) {
        if (*o.single < 2 || !is_prime(static_cast<std::uint64_t>(*o.single))) {
            throw domain_error(std::to_string(*o.single) + " is not prime");
        }
        primes.push_back(*o.single);
    } else {
        if (!o.max_prime) throw domain_error("u needs --max-prime or -p");
        if (*o.max_prime < 2) throw domain_error("--max-prime must be at least 2");
        for (auto p : primes_up_to(static_cast<std::uint64_t>(*o.max_prime))) primes.push_back(static_cast<std::int64_t>(p));
    }

    Json cache = o.cache_path.empty() ? Json::object() : read_cache(o.cache_path);
    bool dirty = false;
    std::vector<UnitSignatureReport> rows;
    for (auto p : primes) {
        std::optional<UnitSignatureReport> r;
        if (!o.cache_path.empty()) r = cached_report(cache, p, method);
        if (!r) {
            r = compute_u(p, method);
            if (!o.cache_path.empty()) {
                Json e;
                e["rank"] = r->rank;
                e["u"] = big_to_json(r->u);
                cache[cache_section(method)][std::to_string(p)] = e;
                dirty = true;
            }
        }
        rows.push_back(std::move(*r));
    }
    if (dirty) write_cache_atomically(o.cache_path, cache);

    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "u";
        j["method"] = to_string(method);
        j["rows"] = Json::array();
        for (const auto& r : rows) {
            Json row;
            row["p"] = r.p;
            row["rank"] = r.rank;
            row["u"] = big_to_json(r.u);
            row["conditional"] = r.conditional;
            j["rows"].push_back(row);
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "p,rank,u,conditional\n";
        for (const auto& r : rows) {
            out << r.p << ',' << r.rank << ',' << r.u.get_str() << ',' << (r.conditional ? "true" : "false") << '\n';
        }
        break;
    case Format::text:
        out << std::setw(6) << "p" << std::setw(7) << "rank" << std::setw(8) << "u" << "  conditional\n";
        for (const auto& r : rows) {
            out << std::setw(6) << r.p << std::setw(7) << r.rank << std::setw(8) << r.u.get_str() << "  "
                << (r.conditional ? "true" : "false") << '\n';
        }
        break;
    }
    return exit_ok;
}

struct ComponentsOptions {
    std::optional<std::int64_t> genus;
    std::optional<std::int64_t> prime;
    bool all_primes = false;
    bool raw = false;
    std::string mode = "auto";
};

inline std::vector<ComponentData> catalog_for(std::int64_t g, std::int64_t p, const ComponentsOptions& o,
                                              std::string& used_mode) {
    const UnitSignatureReport u = compute_u(p);
    const bool tuples = o.mode == "tuples" || (o.mode == "auto" && tuple_enumeration_feasible(g, p));
    used_mode = tuples ? "tuples" : "profiles";
    return tuples ? enumerate_components(g, p, !o.raw, u) : enumerate_profiles(g, p, u);
}

inline int cmd_components(const ComponentsOptions& o, Format fmt, std::ostream& out) {
    if (!o.genus || *o.genus < 1) throw domain_error("--genus must be at least 1");
    if (o.all_primes == o.prime.has_value()) throw domain_error("components needs exactly one of --prime, --all-primes");
    const std::int64_t g = *o.genus;
    std::vector<std::int64_t> primes;
    if (o.prime) {
        OddPrime{*o.prime};
        primes.push_back(*o.prime);
    } else {
        for (auto p : primes_up_to(static_cast<std::uint64_t>(2 * g + 1))) {
            if (p != 2) primes.push_back(static_cast<std::int64_t>(p));
        }
    }

    struct Section {
        std::int64_t p;
        std::string mode;
        std::vector<ComponentData> rows;
    };
    std::vector<Section> sections;
    for (auto p : primes) {
        Section s{p, "", {}};
        s.rows = catalog_for(g, p, o, s.mode);
        sections.push_back(std::move(s));
    }

    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "components";
        j["genus"] = g;
        j["mode"] = o.mode;
        j["rows"] = Json::array();
        if (o.all_primes) j["rows"].push_back(p2_summary_json());
        for (const auto& s : sections) {
            for (const auto& d : s.rows) j["rows"].push_back(component_json(d));
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "p,b,c,dim,pi,n,profile\n";
        if (o.all_primes) out << "2,n/a,n/a,n/a,1,,\n";
        for (const auto& s : sections) {
            for (const auto& d : s.rows) out << component_csv(d) << '\n';
        }
        break;
    case Format::text:
        out << "numerical classes for genus " << g << '\n';
        if (o.all_primes) out << "p=2  all classes  dim=n/a  pi=1\n";
        for (const auto& s : sections) {
            out << "p=" << s.p << ": " << s.rows.size() << " " << s.mode << '\n';
            for (const auto& d : s.rows) out << "  " << component_text(d) << '\n';
        }
        break;
    }
    return exit_ok;
}

struct CwOptions {
    std::optional<std::int64_t> gamma;
    std::optional<std::int64_t> prime;
    std::optional<std::string> rotations;
    std::vector<std::int64_t> superelliptic;
};

inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw domain_error("not an integer: " + item);
        }
        if (pos != item.size()) throw domain_error("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

inline int cmd_cw(const CwOptions& o, Format fmt, std::ostream& out) {
    std::optional<CoverSignature> sig;
    if (!o.superelliptic.empty()) {
        if (o.gamma || o.prime || o.rotations) throw domain_error("--superelliptic excludes --gamma/--prime/--rotations");
        sig = superelliptic_signature(OddPrime(o.superelliptic[0]), o.superelliptic[1]).signature;
    } else {
        if (!o.gamma || !o.prime) throw domain_error("cw needs --gamma and --prime (or --superelliptic P N)");
        sig = CoverSignature(*o.gamma, OddPrime(*o.prime), o.rotations ? parse_int_list(*o.rotations) : std::vector<std::int64_t>{});
    }
    const std::int64_t genus = riemann_hurwitz_genus(*sig);
    const ComponentData d = component_of_cover(*sig);
    const std::vector<std::int64_t>& n = d.tuple.dims();

    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "cw";
        j["signature"] = {{"gamma", sig->gamma()}, {"p", sig->p().value()}, {"rotations", sig->rotations()}};
        j["n"] = Json::array();
        for (const Run& r : runs(n, 0)) j["n"].push_back({r.value, r.last - r.first + 1});
        j["genus"] = genus;
        j["component"] = component_json(d);
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "gamma,p,genus,b,c,dim,pi,n\n";
        out << sig->gamma() << ',' << sig->p().value() << ',' << genus << ',' << d.b << ',' << d.c << ','
            << *d.dimension << ',' << to_string(d.pi) << ',' << join(n, ";") << '\n';
        break;
    case Format::text:
        out << "signature: gamma=" << sig->gamma() << " p=" << sig->p().value() << " rotations=("
            << join(sig->rotations(), ",") << ")\n";
        out << "genus: " << genus << '\n';
        if (sig->p().value() > run_length_threshold) {
            out << "n_0 = " << n[0] << '\n';
            for (const Run& r : runs(n, 1)) {
                out << r.first << " <= i <= " << r.last << " : n_i = " << r.value << '\n';
            }
        } else {
            out << "n = " << tuple_text(d.tuple) << '\n';
        }
        out << "b=" << d.b << " c=" << d.c << " dim=" << *d.dimension << " pi=" << to_string(d.pi) << '\n';
        break;
    }
    return exit_ok;
}

struct Genus4Options {
    std::int64_t samples = 20;
    std::uint64_t seed = 7;
};

inline constexpr std::int64_t dual_tau_samples = 10;

inline int cmd_verify_genus4(const Genus4Options& o, Format fmt, std::ostream& out) {
    if (o.samples < 1) throw domain_error("--samples must be at least 1");
    const IntMatrix rho = rho_eta();
    const bool symplectic = is_symplectic(rho, 4);
    const auto order = matrix_order(rho, 12);
    const FixedFamilyReport fam = verify_fixed_family(o.samples, o.seed);

    RationalSampler dual_sampler(o.seed + 1);
    std::vector<std::pair<mpq_class, mpq_class>> dual_points;
    std::size_t dual_symmetric = 0;
    for (std::int64_t k = 0; k < dual_tau_samples; ++k) {
        mpq_class a = dual_sampler.next();
        mpq_class b = dual_sampler.next();
        if (dual_tau(a, b).is_symmetric()) ++dual_symmetric;
        dual_points.emplace_back(std::move(a), std::move(b));
    }
    const bool ok = symplectic && order == 3 && fam.passed() &&
                    dual_symmetric == static_cast<std::size_t>(dual_tau_samples);

    switch (fmt) {
    case Format::json: {
        Json j;
        j["command"] = "verify-genus4";
        j["symplectic"] = symplectic;
        j["order"] = order ? Json(*order) : Json(nullptr);
        j["convention"] = to_string(fam.convention);
        j["samples"] = Json::array();
        for (const auto& s : fam.samples) {
            j["samples"].push_back({{"a", s.a.get_str()}, {"b", s.b.get_str()}, {"c", s.c.get_str()},
                                    {"status", to_string(s.status)}});
        }
        j["passed"] = fam.count(SampleStatus::pass);
        j["failed"] = fam.count(SampleStatus::fail);
        j["singular"] = fam.count(SampleStatus::singular);
        j["dual_tau_symmetric"] = dual_symmetric;
        j["dual_tau_samples"] = dual_tau_samples;
        j["dual_polarization"] = dual_polarization_type();
        j["ok"] = ok;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "sample,a,b,c,status\n";
        for (std::size_t i = 0; i < fam.samples.size(); ++i) {
            const auto& s = fam.samples[i];
            out << i + 1 << ',' << s.a.get_str() << ',' << s.b.get_str() << ',' << s.c.get_str() << ','
                << to_string(s.status) << '\n';
        }
        break;
    case Format::text:
        out << "rho_r(eta) symplectic: " << (symplectic ? "true" : "false") << '\n';
        out << "rho_r(eta) order: " << (order ? std::to_string(*order) : "> 12") << '\n';
        out << "action convention: " << to_string(fam.convention) << '\n';
        for (std::size_t i = 0; i < fam.samples.size(); ++i) {
            const auto& s = fam.samples[i];
            out << "sample " << i + 1 << ": a=" << s.a.get_str() << " b=" << s.b.get_str() << " c=" << s.c.get_str()
                << " " << to_string(s.status) << '\n';
        }
        out << "family fixed: " << fam.count(SampleStatus::pass) << " pass, " << fam.count(SampleStatus::fail)
            << " fail, " << fam.count(SampleStatus::singular) << " singular\n";
        out << "dual tau symmetric: " << dual_symmetric << "/" << dual_tau_samples << '\n';
        out << "dual polarization type: diag(" << detail::join(dual_polarization_type(), ", ") << ")\n";
        out << "result: " << (ok ? "pass" : "FAIL") << '\n';
        break;
    }
    return ok ? exit_ok : exit_internal;
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Principal-polarization counts on the singular locus of A_g", "polcount"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

    detail::UOptions uo;
    auto* u = app.add_subcommand("u", "Table of u(p) = |U+/U^2| for primes");
    u->fallthrough();
    auto* max_opt = u->add_option("--max-prime", uo.max_prime, "Largest prime in the table");
    u->add_option("-p,--prime", uo.single, "A single prime")->excludes(max_opt);
    u->add_option("--cache", uo.cache_path, "JSON result cache");
    u->add_option("--method", uo.method, "saturated (exact) or cyclotomic")
        ->check(CLI::IsMember({"saturated", "cyclotomic"}));

    detail::ComponentsOptions co;
    auto* comp = app.add_subcommand("components", "Numerical classes of components of Sing(A_g)");
    comp->fallthrough();
    comp->add_option("--genus", co.genus, "Genus g")->required();
    auto* prime_opt = comp->add_option("--prime", co.prime, "Odd prime p");
    comp->add_flag("--all-primes", co.all_primes, "Every odd p with (p-1)/2 <= g, plus p = 2")->excludes(prime_opt);
    comp->add_flag("--raw", co.raw, "Do not merge Galois-equivalent tuples");
    comp->add_option("--mode", co.mode, "tuples, profiles, or auto")->check(CLI::IsMember({"auto", "tuples", "profiles"}));

    detail::CwOptions cwo;
    auto* cw = app.add_subcommand("cw", "Eigenspace dimensions of a cyclic cover");
    cw->fallthrough();
    cw->add_option("--gamma", cwo.gamma, "Genus of the quotient");
    cw->add_option("--prime", cwo.prime, "Degree p of the cover");
    cw->add_option("--rotations", cwo.rotations, "Comma-separated rotation numbers");
    cw->add_option("--superelliptic", cwo.superelliptic, "y^p = f(x) with deg f = N")->expected(2);

    detail::Genus4Options go;
    auto* g4 = app.add_subcommand("verify-genus4", "Exact checks of the genus-4 order-3 family");
    g4->fallthrough();
    g4->add_option("--samples", go.samples, "Number of rational samples");
    g4->add_option("--seed", go.seed, "Sampler seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const Format fmt = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);
    std::ostringstream buffer; // emitted only on success
    try {
        int code = exit_ok;
        if (*u) code = detail::cmd_u(uo, fmt, buffer);
        if (*comp) code = detail::cmd_components(co, fmt, buffer);
        if (*cw) code = detail::cmd_cw(cwo, fmt, buffer);
        if (*g4) code = detail::cmd_verify_genus4(go, fmt, buffer);
        out << buffer.str();
        return code;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const io_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const inconclusive_error& e) {
        err << "inconclusive: " << e.what() << '\n';
        return exit_inconclusive;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("polcount");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace polcount::cli
