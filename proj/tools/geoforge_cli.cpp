// geoforge command line: strand, constants, survey, word, example.

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "geoforge/geoforge.hpp"
#include "geoforge/report.hpp"

namespace gf = geoforge;

namespace {

enum Exit { ok = 0, usage = 2, domain = 3, assertion = 4, capped = 5 };

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decimal, scientific, or p/q.
gf::Real parse_real(const std::string& s, unsigned bits) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return gf::Real(s, bits);
    return gf::Real(s.substr(0, slash), bits) / gf::Real(s.substr(slash + 1), bits);
}

// Digits or 1eN.
gf::Integer parse_integer(const std::string& s) {
    const auto e = s.find_first_of("eE");
    if (e == std::string::npos) return gf::Integer(s);
    gf::Integer mant(s.substr(0, e));
    const int exp = std::stoi(s.substr(e + 1));
    for (int i = 0; i < exp; ++i) mant *= 10;
    return mant;
}

std::string timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

gf::Json meta() {
    gf::Json m;
    m["tool"] = "geoforge";
    m["generated"] = timestamp();
    return m;
}

struct Common {
    unsigned bits = gf::default_precision_bits();
    bool no_meta = false;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--precision", c.bits, "working precision in bits")
        ->check(CLI::Range(gf::kMinPrecisionBits, gf::kMaxPrecisionBits));
    app->add_flag("--no-meta", c.no_meta, "omit the timestamped metadata block");
}

void emit(const gf::Json& body, const Common& c) {
    gf::Json out;
    if (!c.no_meta) out["meta"] = meta();
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    std::cout << out.dump(2) << '\n';
}

// strand ---------------------------------------------------------------

struct StrandArgs {
    Common common;
    std::optional<std::string> h, length, h0;
    std::optional<long> omega;
};

int run_strand(const StrandArgs& a) {
    const unsigned bits = a.common.bits;
    if (!a.h) throw Usage("strand needs --h");
    const int chosen = int(a.length.has_value()) + int(a.omega.has_value()) + int(a.h0.has_value());
    if (chosen != 1) throw Usage("strand needs exactly one of --length, --omega, --h0");
    const gf::Real h = parse_real(*a.h, bits);
    gf::Json j;
    j["config"] = {{"precision_bits", bits}};
    j["h"] = h.str();
    if (a.length) {
        const gf::Real l = parse_real(*a.length, bits);
        const auto s = gf::make_strand(h, l, bits);
        j["operation"] = "winding_number";
        j["length"] = l.str();
        j["omega"] = s.winding;
        j["self_intersections"] = gf::strand_self_intersections(s);
        j["formula"] = "omega = floor((2/h) sinh(l/2)), i = omega - 1";
        j["projected_winding"] = gf::projected_winding(h, l, bits);
        j["projected_winding_formula"] = "ceil((2/h) sinh(l/2))";
    } else if (a.omega) {
        const auto [lo, hi] = gf::strand_length_bounds(h, *a.omega, bits);
        j["operation"] = "strand_length_bounds";
        j["omega"] = *a.omega;
        j["lower"] = lo.str();
        j["upper"] = hi.str();
        j["formula"] = "2 asinh(h(omega-1)/2) <= l <= 2 asinh(h omega/2)";
    } else {
        const gf::Real h0 = parse_real(*a.h0, bits);
        j["operation"] = "depth_threshold";
        j["h0"] = h0.str();
        j["threshold"] = gf::depth_threshold(h, h0, bits).str();
        j["formula"] = "2 acosh(h/h0)";
    }
    emit(j, a.common);
    return ok;
}

// constants ------------------------------------------------------------

struct ConstantsArgs {
    Common common;
    std::optional<int> g, n;
    std::optional<std::string> s, h_max, systole, d1, d_eps0;
    bool surface_y = false;
    std::vector<std::string> ks;
    std::string d_cap = "1e64", k_cap = "1e300";
};

int run_constants(const ConstantsArgs& a) {
    const unsigned bits = a.common.bits;
    const bool topo = a.g || a.n || a.s;
    const bool expl = a.h_max || a.systole || a.d1 || a.d_eps0;
    if (int(topo) + int(expl) + int(a.surface_y) != 1)
        throw Usage("choose one of --surface-y, topological (--g --n --s) or explicit data");
    const gf::SearchCaps caps{parse_integer(a.d_cap), parse_integer(a.k_cap)};
    const unsigned work = gf::constants_working_precision(bits, caps);
    gf::SurfaceDescription surface;
    if (a.surface_y) {
        surface = gf::thrice_punctured_sphere(work);
    } else if (topo) {
        if (!(a.g && a.n && a.s)) throw Usage("topological mode needs --g, --n and --s");
        surface = gf::SurfaceDescription::topological_type(*a.g, *a.n, parse_real(*a.s, work));
    } else {
        if (!(a.h_max && a.systole && a.d1 && a.d_eps0))
            throw Usage("explicit mode needs --h-max, --systole, --d1 and --d-eps0");
        surface = gf::SurfaceDescription::explicit_surface(parse_real(*a.h_max, work), parse_real(*a.systole, work),
                                                           parse_real(*a.d1, work), parse_real(*a.d_eps0, work));
    }
    std::vector<gf::Integer> ks;
    for (const auto& k : a.ks) ks.push_back(parse_integer(k));
    const auto report = gf::compute_constants(surface, bits, caps);
    gf::Json j;
    j["config"] = {{"precision_bits", bits}, {"d_cap", caps.d_cap.str()}, {"k_cap", caps.k_cap.str()}};
    j["report"] = gf::to_json(report, ks);
    emit(j, a.common);
    return ok;
}

// survey ---------------------------------------------------------------

struct SurveyArgs {
    Common common;
    std::size_t max_len = 0;
    std::vector<long> ks;
    unsigned threads = gf::hardware_threads();
    std::string format = "json";
    std::string filter = "all";
    std::optional<int> start_radius, max_radius;
    std::string out, summary_out;
};

int run_survey(const SurveyArgs& a) {
    gf::SurveyConfig cfg;
    cfg.max_len = a.max_len;
    cfg.ks = a.ks;
    cfg.threads = a.threads;
    cfg.bits = a.common.bits;
    cfg.intersection.start_radius = a.start_radius;
    cfg.intersection.max_radius = a.max_radius;
    const auto result = gf::run_survey(cfg);

    gf::Json config;
    config["max_len"] = cfg.max_len;
    config["k"] = cfg.ks;
    config["precision_bits"] = cfg.bits;
    config["filter"] = a.filter;
    config["start_radius"] = a.start_radius ? gf::Json(*a.start_radius) : gf::Json("2|w|-2");
    config["max_radius"] = a.max_radius ? gf::Json(*a.max_radius) : gf::Json("start+8");
    config["classes"] = result.rows.size();
    gf::Json summaries = gf::Json::array();
    for (const auto& s : result.summaries) summaries.push_back(gf::to_json(s));

    auto shown = [&](const gf::SurveyRow& r) { return a.filter == "all" || r.back_shape.has_value(); };

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw Usage("cannot open " + a.out);
    }
    std::ostream& os = a.out.empty() ? std::cout : file;

    if (a.format == "csv") {
        if (!a.common.no_meta) os << "# geoforge survey generated " << timestamp() << '\n';
        gf::write_csv_header(os);
        for (const auto& r : result.rows)
            if (shown(r)) gf::write_csv_row(os, r);
        gf::Json s;
        s["config"] = config;
        s["summaries"] = summaries;
        if (!a.summary_out.empty()) {
            std::ofstream sf(a.summary_out);
            if (!sf) throw Usage("cannot open " + a.summary_out);
            sf << s.dump(2) << '\n';
        } else {
            std::cerr << s.dump(2) << '\n';
        }
        return ok;
    }
    gf::Json out;
    if (!a.common.no_meta) out["meta"] = meta();
    out["config"] = config;
    out["summaries"] = summaries;
    gf::Json rows = gf::Json::array();
    for (const auto& r : result.rows)
        if (shown(r)) rows.push_back(gf::to_json(r));
    out["rows"] = rows;
    os << out.dump(2) << '\n';
    return ok;
}

// word -----------------------------------------------------------------

struct WordArgs {
    Common common;
    std::string word;
    std::optional<int> start_radius, max_radius;
};

int run_word(const WordArgs& a) {
    const unsigned bits = a.common.bits;
    const auto w = gf::CyclicWord::canonicalize(a.word);
    const auto cls = gf::classify_word(w, bits);
    gf::Json j;
    j["config"] = {{"precision_bits", bits}};
    j["input"] = a.word;
    j["canonical"] = w.str();
    j["trace"] = cls.trace.str();
    j["kind"] = std::string(gf::kind_name(cls.kind));
    j["primitive"] = cls.primitive;
    j["length"] = cls.length ? gf::Json(cls.length->str()) : gf::Json(nullptr);
    j["bacK"] = cls.back_shape ? gf::Json(cls.back_shape->str()) : gf::Json(nullptr);
    if (cls.kind == gf::WordKind::hyperbolic && cls.primitive) {
        const auto si = gf::self_intersection(w, {a.start_radius, a.max_radius});
        j["self_intersections"] = si.count;
        j["certified"] = si.certified;
        j["complete"] = si.complete;
        j["radius_used"] = si.radius_used;
        j["window"] = si.window;
        j["note"] = nullptr;
    } else {
        j["self_intersections"] = nullptr;
        j["certified"] = nullptr;
        j["note"] = cls.kind == gf::WordKind::peripheral ? "peripheral class: no closed geodesic"
                                                         : "proper power: intersection count skipped";
    }
    emit(j, a.common);
    return ok;
}

// example --------------------------------------------------------------

struct ExampleArgs {
    Common common;
    std::vector<long> ks;
    unsigned cap = 1024;
};

int run_example(const ExampleArgs& a) {
    gf::Json reports = gf::Json::array();
    bool failed = false;
    for (long k : a.ks) {
        const auto r = gf::build_example_surface(k, a.common.bits, a.cap);
        reports.push_back(gf::to_json(r));
        if (r.asserted && !(r.bullet1 && r.bullet2)) {
            failed = true;
            std::cerr << "k=" << k << ": asserted inequality fails (bullet1=" << r.bullet1
                      << ", bullet2=" << r.bullet2 << ")\n";
        }
    }
    gf::Json j;
    j["config"] = {{"precision_bits", a.common.bits}, {"precision_cap", a.cap}};
    j["reports"] = reports;
    emit(j, a.common);
    return failed ? assertion : ok;
}

int exit_code(gf::Errc e) {
    switch (e) {
    case gf::Errc::no_solution_below_cap:
    case gf::Errc::precision_exhausted:
    case gf::Errc::tolerance_breach: return capped;
    default: return domain;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed geodesics, cusp strands and surface constants"};
    app.require_subcommand(1);

    StrandArgs strand;
    auto* s = app.add_subcommand("strand", "winding number, length bounds or depth threshold of a cusp strand");
    s->set_help_flag("--help", "print this help message and exit");
    add_common(s, strand.common);
    s->add_option("--h", strand.h, "horocycle length");
    s->add_option("--length", strand.length, "strand length");
    s->add_option("--omega", strand.omega, "winding number")->check(CLI::PositiveNumber);
    s->add_option("--h0", strand.h0, "deeper horocycle length");

    ConstantsArgs constants;
    auto* c = app.add_subcommand("constants", "constants report for a surface");
    add_common(c, constants.common);
    c->add_option("--g", constants.g, "genus");
    c->add_option("--n", constants.n, "number of cusps");
    c->add_option("--s", constants.s, "systole floor");
    c->add_option("--h-max", constants.h_max, "longest embedded horocycle length");
    c->add_option("--systole", constants.systole, "systole length");
    c->add_option("--d1", constants.d1, "orthogonal self-distance of the length-1 horocycle");
    c->add_option("--d-eps0", constants.d_eps0, "orthogonal self-distance at the eps0-thin boundary");
    c->add_flag("--surface-y", constants.surface_y, "thrice punctured sphere preset");
    c->add_option("--k", constants.ks, "evaluate C(k) (repeatable)");
    c->add_option("--d-cap", constants.d_cap, "search cap for D");
    c->add_option("--k-cap", constants.k_cap, "search cap for K");

    SurveyArgs survey;
    auto* v = app.add_subcommand("survey", "enumerate closed geodesics on the thrice punctured sphere");
    add_common(v, survey.common);
    v->add_option("--max-len", survey.max_len, "maximal word length")->required()->check(CLI::Range(2, 64));
    v->add_option("--k", survey.ks, "report shortest class with at least k self-intersections (repeatable)")
        ->check(CLI::PositiveNumber);
    v->add_option("--threads", survey.threads, "worker threads")->check(CLI::Range(1, 1024));
    v->add_option("--format", survey.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    v->add_option("--filter", survey.filter, "rows to print: all or bacK")->check(CLI::IsMember({"all", "bacK"}));
    v->add_option("--start-radius", survey.start_radius, "first radius of the stabilization check");
    v->add_option("--max-radius", survey.max_radius, "last radius of the stabilization check");
    v->add_option("--out", survey.out, "write rows to a file");
    v->add_option("--summary-out", survey.summary_out, "csv mode: write summaries to a file");

    WordArgs word;
    auto* w = app.add_subcommand("word", "classify one word and count its self-intersections");
    add_common(w, word.common);
    w->add_option("word", word.word, "word over a, b, A, B")->required();
    w->add_option("--start-radius", word.start_radius, "first radius of the stabilization check");
    w->add_option("--max-radius", word.max_radius, "last radius of the stabilization check");

    ExampleArgs example;
    auto* e = app.add_subcommand("example", "counterexample surfaces: lengths and inequalities");
    add_common(e, example.common);
    e->add_option("--k", example.ks, "parameter k (repeatable)")->required()->check(CLI::PositiveNumber);
    e->add_option("--precision-cap", example.cap, "largest precision tried when certifying margins");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*s) return run_strand(strand);
        if (*c) return run_constants(constants);
        if (*v) return run_survey(survey);
        if (*w) return run_word(word);
        if (*e) return run_example(example);
    } catch (const Usage& u) {
        std::cerr << "usage error: " << u.what() << '\n';
        return usage;
    } catch (const gf::Error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_code(err.code());
    }
    return usage;
}
