#include "bilie/cli.hpp"

#include "bilie/class1.hpp"
#include "bilie/class2.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

namespace bilie {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevel{"schema", "name",  "algebra", "builder", "times", "params",
                                      "checks", "output", "expect", "fault"};
const std::set<std::string> kParams{"s", "side", "a", "cartan", "b0", "first", "centre_first", "x", "diag"};

Scalar scalar_of(const json& v, const std::string& what)
{
    if (v.is_number_integer()) return Scalar(v.get<long>());
    if (v.is_string()) {
        try {
            return Scalar::parse(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw ConfigError(what + ": expected an integer or a \"p/q+r/s*i\" string");
}

std::vector<Scalar> scalars_of(const json& v, const std::string& what)
{
    if (!v.is_array()) throw ConfigError(what + ": expected an array");
    std::vector<Scalar> out;
    for (const auto& x : v) out.push_back(scalar_of(x, what));
    return out;
}

std::vector<int> ints_of(const json& v, const std::string& what)
{
    if (!v.is_array()) throw ConfigError(what + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw ConfigError(what + ": expected an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

const json* param(const JobConfig& c, const std::string& key)
{
    if (c.params.contains(key)) return &c.params.at(key);
    return nullptr;
}

/// Trailing integer of a tag such as "so5".
int tag_size(const std::string& tag, const std::string& prefix)
{
    if (tag.rfind(prefix, 0) != 0 || tag.size() == prefix.size()) throw ConfigError("algebra: expected " + prefix + "N");
    try {
        std::size_t used = 0;
        int n = std::stoi(tag.substr(prefix.size()), &used);
        if (used + prefix.size() != tag.size() || n < 2) throw ConfigError("algebra: bad size in " + tag);
        return n;
    } catch (const std::logic_error&) {
        throw ConfigError("algebra: bad size in " + tag);
    }
}

json checks_json(const std::vector<CheckResult>& cs)
{
    json a = json::array();
    for (const auto& c : cs) a.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return a;
}

json scalars_json(const std::vector<Scalar>& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

// Job construction.

using SpecificFn = std::function<std::vector<CheckResult>(const BiLieStructure&, const TimesReport&)>;

struct Job {
    std::optional<BiLieStructure> s;
    SpecificFn specific;
    json labels;
    std::vector<CheckResult> checks; ///< matrix jobs
    std::vector<Scalar> times;       ///< matrix jobs
};

AlgebraPtr root_algebra(const std::string& tag)
{
    return std::make_shared<const LieAlgebra>(chevalley_algebra(tag));
}

Job class1_job(const QuasigradingI& q)
{
    Job j;
    j.s = wno_class1(q);
    j.specific = [q](const BiLieStructure& s, const TimesReport& r) { return check_class1(q, s, r); };
    return j;
}

Job class2_job(const Class2Build& b, bool parabolic)
{
    Job j;
    j.s = b.s;
    j.labels = b.labels.to_json(*b.s.alg->roots);
    j.specific = [b, parabolic](const BiLieStructure& s, const TimesReport& r) {
        Class2Build c = b;
        c.s = s;
        auto out = check_class2(c, r);
        if (parabolic) {
            bool zero = torsion(*s.alg, b.W_raw) == Table(s.alg->dim);
            out.push_back({"unprojected_torsion_zero", zero, zero ? "" : "T_W != 0 before the projection"});
        }
        return out;
    };
    return j;
}

Job build_job(const JobConfig& c)
{
    const std::string& b = c.builder;
    const auto& t = c.times;
    if (b.rfind("ex12.", 0) == 0 || b.rfind("class2.", 0) == 0) {
        AlgebraPtr L = root_algebra(c.algebra);
        if (b == "ex12.12") {
            auto side = TwoTimeSide::FirstFull;
            if (auto* p = param(c, "side")) side = p->get<std::string>() == "second" ? TwoTimeSide::SecondFull : side;
            std::vector<int> type;
            if (auto* p = param(c, "s")) type = ints_of(*p, "s");
            return class1_job(example_12_12(L, t, side, type));
        }
        if (b == "ex12.13") return class1_job(example_12_13(L, t));
        if (b == "ex12.14") return class1_job(example_12_14(L, t));
        if (b == "ex12.15") return class1_job(example_12_15(L, t));
        if (b == "ex12.16") return class1_job(example_12_16(L, t));
        if (b == "ex12.17") return class1_job(example_12_17(L, t, scalar_of(*param(c, "a"), "a")));
        if (b == "ex12.18") {
            std::optional<Vec> s;
            if (auto* p = param(c, "cartan")) {
                auto v = scalars_of(*p, "cartan");
                if (static_cast<int>(v.size()) != L->rank) throw PreconditionError("ex12.18: cartan needs rank entries");
                Vec w(L->rank);
                for (int k = 0; k < L->rank; ++k) w(k) = v[k];
                s = w;
            }
            return class1_job(example_12_18(L, t, s));
        }
        if (t.size() != 2) throw PreconditionError(b + ": needs two times");
        std::vector<int> first;
        if (auto* p = param(c, "first")) first = ints_of(*p, "first");
        bool centre_first = true;
        if (auto* p = param(c, "centre_first")) centre_first = p->get<bool>();
        if (b == "class2.parabolic") {
            std::vector<int> b0;
            if (auto* p = param(c, "b0")) b0 = ints_of(*p, "b0");
            for (int& k : b0) {
                if (k < 1 || k > L->rank) throw PreconditionError("b0: simple root index out of range");
                --k;
            }
            return class2_job(parabolic_wno(L, t[0], t[1], b0, first, centre_first), true);
        }
        if (b == "class2.zm") return class2_job(zm_wno(L, t[0], t[1], ints_of(*param(c, "s"), "s"), first, centre_first), false);
        if (b == "class2.e7") {
            Scalar x(0);
            if (auto* p = param(c, "x")) x = scalar_of(*p, "x");
            return class2_job(e7_example(x, t[0], t[1]), false);
        }
    }
    Job j;
    if (b == "matrix.so") {
        int N = tag_size(c.algebra, "so");
        auto d = scalars_of(*param(c, "diag"), "diag");
        if (static_cast<int>(d.size()) != N) throw PreconditionError("matrix.so: diag needs N entries");
        Mat A = zeros<Scalar>(N, N);
        for (int k = 0; k < N; ++k) A(k, k) = d[k];
        auto m = matrix_crosscheck_so(N, A);
        j.checks = m.checks;
        if (!t.empty()) {
            bool eq = m.times == sorted_unique(t);
            j.checks.push_back({"times_equal_expected", eq, eq ? "" : "times differ from the config"});
        }
        j.times = m.times;
    } else if (b == "matrix.su") {
        j.checks = compact_restriction_sl(tag_size(c.algebra, "su") - 1, t);
    } else if (b == "gl") {
        j.checks = {gl_torsion_match(tag_size(c.algebra, "gl") - 1, t)};
    }
    return j;
}

// Faults.

std::vector<std::array<int, 3>> constant_sites(const LieAlgebra& L)
{
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < L.dim; ++i)
        for (int j = i + 1; j < L.dim; ++j)
            for (const auto& [k, v] : L.table.at(i, j))
                if (!v.is_zero()) out.push_back({i, j, k});
    return out;
}

/// Columns: eigenvectors of W (root vectors, then a Cartan eigenbasis), with their eigenvalues.
std::vector<std::pair<Vec, Scalar>> eigen_sites(const LieAlgebra& L, const Mat& W, const std::vector<Scalar>& hint)
{
    std::vector<std::pair<Vec, Scalar>> out;
    if (!L.has_grading()) return out;
    Mat C = W.topLeftCorner(L.rank, L.rank);
    std::vector<Scalar> cand = hint;
    for (int k = 0; k < L.dim; ++k) cand.push_back(W(k, k));
    int found = 0;
    for (const auto& t : sorted_unique(cand)) {
        Mat K = kernel(Mat(C - t * identity<Scalar>(L.rank)));
        for (int col = 0; col < K.cols(); ++col) {
            Vec v = zero_vec<Scalar>(L.dim);
            v.head(L.rank) = K.col(col);
            out.push_back({v, t});
            ++found;
        }
    }
    if (found != L.rank) out.clear();
    for (int b = L.rank; b < L.dim; ++b) {
        Vec e = zero_vec<Scalar>(L.dim);
        e(b) = 1;
        out.push_back({e, W(b, b)});
    }
    return out;
}

BiLieStructure apply_fault(const BiLieStructure& s, const Fault& f, const std::vector<Scalar>& hint)
{
    const LieAlgebra& L = *s.alg;
    if (f.kind == Fault::StructureConstant) {
        auto sites = constant_sites(L);
        if (f.index < 0 || f.index >= static_cast<int>(sites.size()))
            throw ConfigError("fault: structure constant index out of range");
        auto [i, j, k] = sites[f.index];
        auto bad = std::make_shared<LieAlgebra>(L);
        for (auto* e : {&bad->table.at(i, j), &bad->table.at(j, i)})
            for (auto& [idx, v] : *e)
                if (idx == k) v = -v;
        BiLieStructure out = make_structure(bad, s.W, s.P, s.label);
        out.principal = s.principal;
        return out;
    }
    auto sites = eigen_sites(L, s.W, hint);
    if (f.index < 0 || f.index >= static_cast<int>(sites.size())) throw ConfigError("fault: eigenvalue index out of range");
    // W + v w^T with w the dual row of v in the eigenbasis
    Mat E(L.dim, static_cast<Eigen::Index>(sites.size()));
    for (std::size_t k = 0; k < sites.size(); ++k) E.col(static_cast<Eigen::Index>(k)) = sites[k].first;
    Mat Ei = inverse(E);
    Mat W = s.W + E.col(f.index) * Ei.row(f.index);
    BiLieStructure out = make_structure(s.alg, W, s.P, s.label);
    out.principal = s.principal;
    return out;
}

template <class F>
void guarded(std::vector<CheckResult>& out, const std::string& stage, F&& f)
{
    try {
        f();
    } catch (const std::exception& e) {
        out.push_back({stage, false, e.what()});
    }
}

std::vector<CheckResult> structure_checks(const BiLieStructure& s, const SpecificFn& specific,
                                          std::optional<TimesReport>& r, std::optional<PairsDiagram>& diagram)
{
    const LieAlgebra& L = *s.alg;
    std::vector<CheckResult> out;
    auto jac = jacobi_check(L.table);
    out.push_back({"algebra_jacobi", jac.pass, jac.describe()});
    auto inv = killing_invariance_check(L);
    std::string iw;
    if (!inv.pass)
        iw = "B([e" + std::to_string(inv.witness[0]) + ",e" + std::to_string(inv.witness[1]) + "],e" +
             std::to_string(inv.witness[2]) + ") + B(e" + std::to_string(inv.witness[1]) + ",[e" +
             std::to_string(inv.witness[0]) + ",e" + std::to_string(inv.witness[2]) + "]) != 0";
    out.push_back({"killing_invariance", inv.pass, iw});
    for (auto& c : verify_structure(s)) out.push_back(std::move(c));
    guarded(out, "times", [&] {
        r = times(s);
        out.push_back({"times_cross_check", r->bhat_consistent, r->bhat_witness});
        out.push_back(cartan_factorization_check(s, *r));
        out.push_back(centre_disjoint_commuting_check(s, *r));
        out.push_back(cartan_in_centres_check(s, *r));
    });
    if (r) {
        guarded(out, "diagram", [&] {
            auto ap = extract_admissible_pair(s, *r);
            diagram = ap.diagram;
            auto tsr = validate_tsr(ap.diagram);
            out.push_back({"tsr", tsr.pass, tsr.describe(*L.roots)});
            out.push_back(lemma_10_10_check(ap.diagram));
            out.push_back(kappa_sum_rule_check(ap.diagram, root_kappa(L, s.W)));
        });
        guarded(out, "builder_checks", [&] {
            for (auto& c : specific(s, *r)) out.push_back(std::move(c));
        });
    }
    std::vector<CheckResult> unique;
    std::set<std::string> seen;
    for (auto& c : out)
        if (seen.insert(c.name).second) unique.push_back(std::move(c));
    return unique;
}

Report finish(Report rep, const std::string& status, int code, const std::string& error)
{
    rep.status = status;
    rep.exit_code = code;
    rep.doc["status"] = status;
    rep.doc["exit_code"] = code;
    if (!error.empty()) rep.doc["error"] = error;
    return rep;
}

} // namespace

std::vector<std::string> builders()
{
    return {"ex12.12", "ex12.13", "ex12.14", "ex12.15", "ex12.16", "ex12.17", "ex12.18",
            "class2.parabolic", "class2.zm", "class2.e7", "matrix.so", "matrix.su", "gl"};
}

JobConfig parse_config(const json& j)
{
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    JobConfig c;
    c.raw = j;
    for (const auto& [k, v] : j.items())
        if (!kTopLevel.count(k) && !kParams.count(k)) throw ConfigError("unknown field \"" + k + "\"");
    if (j.contains("schema") && j.at("schema") != kConfigSchema)
        throw ConfigError(std::string("schema must be \"") + kConfigSchema + "\"");
    auto str = [&](const char* key, bool required) {
        if (!j.contains(key)) {
            if (required) throw ConfigError(std::string("missing field \"") + key + "\"");
            return std::string();
        }
        if (!j.at(key).is_string()) throw ConfigError(std::string(key) + ": expected a string");
        return j.at(key).get<std::string>();
    };
    c.algebra = str("algebra", true);
    c.builder = str("builder", true);
    c.name = str("name", false);
    c.output = str("output", false);
    if (j.contains("expect")) c.expect = str("expect", false);
    if (c.expect != "pass" && c.expect != "fail" && c.expect != "precondition_error")
        throw ConfigError("expect: one of pass, fail, precondition_error");
    auto bs = builders();
    if (std::find(bs.begin(), bs.end(), c.builder) == bs.end()) throw ConfigError("unknown builder \"" + c.builder + "\"");
    if (j.contains("times")) c.times = scalars_of(j.at("times"), "times");
    if (j.contains("params")) {
        if (!j.at("params").is_object()) throw ConfigError("params: expected an object");
        for (const auto& [k, v] : j.at("params").items())
            if (!kParams.count(k)) throw ConfigError("params: unknown parameter \"" + k + "\"");
        c.params = j.at("params");
    }
    for (const auto& k : kParams)
        if (j.contains(k)) c.params[k] = j.at(k);
    if (j.contains("checks")) {
        if (!j.at("checks").is_array()) throw ConfigError("checks: expected an array of names");
        for (const auto& x : j.at("checks")) {
            if (!x.is_string()) throw ConfigError("checks: expected an array of names");
            c.checks.push_back(x.get<std::string>());
        }
    }
    if (j.contains("fault")) {
        const auto& f = j.at("fault");
        if (!f.is_object() || !f.contains("kind") || !f.contains("index") || !f.at("index").is_number_integer())
            throw ConfigError("fault: expected {\"kind\": ..., \"index\": n}");
        Fault ft;
        auto kind = f.at("kind").get<std::string>();
        if (kind == "structure_constant")
            ft.kind = Fault::StructureConstant;
        else if (kind == "eigenvalue")
            ft.kind = Fault::Eigenvalue;
        else
            throw ConfigError("fault.kind: structure_constant or eigenvalue");
        ft.index = f.at("index").get<int>();
        c.fault = ft;
    }

    // parameter types, before any computation
    const auto& p = c.params;
    auto need = [&](const char* key) {
        if (!p.contains(key)) throw ConfigError(c.builder + ": missing parameter \"" + key + "\"");
    };
    if (p.contains("s")) ints_of(p.at("s"), "s");
    if (p.contains("b0")) ints_of(p.at("b0"), "b0");
    if (p.contains("first")) ints_of(p.at("first"), "first");
    if (p.contains("a")) scalar_of(p.at("a"), "a");
    if (p.contains("x")) scalar_of(p.at("x"), "x");
    if (p.contains("cartan")) scalars_of(p.at("cartan"), "cartan");
    if (p.contains("diag")) scalars_of(p.at("diag"), "diag");
    if (p.contains("centre_first") && !p.at("centre_first").is_boolean()) throw ConfigError("centre_first: expected a boolean");
    if (p.contains("side") && (!p.at("side").is_string() || (p.at("side") != "first" && p.at("side") != "second")))
        throw ConfigError("side: \"first\" or \"second\"");
    if (c.builder == "ex12.17") need("a");
    if (c.builder == "class2.zm") need("s");
    if (c.builder == "matrix.so") need("diag");
    bool roots = c.builder.rfind("ex12.", 0) == 0 || c.builder.rfind("class2.", 0) == 0;
    if (roots) {
        try {
            build_root_system(c.algebra);
        } catch (const std::exception& e) {
            throw ConfigError("algebra: " + std::string(e.what()));
        }
    } else {
        const char* prefix = c.builder == "matrix.so" ? "so" : c.builder == "matrix.su" ? "su" : "gl";
        tag_size(c.algebra, prefix);
        if (c.fault) throw ConfigError("fault injection needs a root-graded structure builder");
    }
    if (c.builder == "class2.e7" && c.algebra != "E7") throw ConfigError("class2.e7: algebra must be E7");
    return c;
}

Report run(const JobConfig& config, const RunOptions& opts)
{
    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.doc = json::object();
    rep.doc["schema"] = kReportSchema;
    rep.doc["convention"] = kChevalleyConvention;
    rep.doc["config"] = config.raw;
    auto timing = [&] {
        if (opts.timing)
            rep.doc["timing"] = {
                {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    };

    Job job;
    try {
        job = build_job(config);
    } catch (const PreconditionError& e) {
        timing();
        return finish(rep, "precondition_error", ExitPrecondition, e.what());
    } catch (const ConfigError& e) {
        timing();
        return finish(rep, "config_error", ExitConfig, e.what());
    }

    std::vector<CheckResult> checks;
    if (job.s) {
        BiLieStructure s = *job.s;
        if (config.fault) {
            try {
                s = apply_fault(s, *config.fault, config.times);
            } catch (const ConfigError& e) {
                timing();
                return finish(rep, "config_error", ExitConfig, e.what());
            }
            rep.doc["fault"] = {{"kind", config.fault->kind == Fault::StructureConstant ? "structure_constant" : "eigenvalue"},
                                {"index", config.fault->index}};
        }
        std::optional<TimesReport> r;
        std::optional<PairsDiagram> d;
        checks = structure_checks(s, job.specific, r, d);
        if (r) rep.doc["times"] = r->to_json(*s.alg);
        if (d) rep.doc["diagram"] = d->to_json();
        if (!job.labels.is_null()) rep.doc["labels"] = job.labels;
        std::size_t bits = std::max({max_bit_length(s.W), max_bit_length(s.P), max_bit_length(s.second)});
        rep.doc["arithmetic"] = {{"max_bit_length", bits}};
        if (opts.emit_structure) {
            rep.doc["structure"] = structure_json(*s.alg);
            json w = json::array(), p = json::array();
            for (int i = 0; i < s.W.rows(); ++i) {
                json wr = json::array(), pr = json::array();
                for (int k = 0; k < s.W.cols(); ++k) {
                    wr.push_back(s.W(i, k).str());
                    pr.push_back(s.P(i, k).str());
                }
                w.push_back(wr);
                p.push_back(pr);
            }
            rep.doc["operator"] = {{"W", w}, {"P", p}};
        }
    } else {
        checks = job.checks;
        if (!job.times.empty()) rep.doc["times"] = {{"times", scalars_json(job.times)}};
    }

    const auto& wanted = opts.checks.empty() ? config.checks : opts.checks;
    if (!wanted.empty()) {
        std::vector<CheckResult> kept;
        for (const auto& name : wanted) {
            auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
            if (it == checks.end()) {
                timing();
                return finish(rep, "config_error", ExitConfig, "unknown check \"" + name + "\" for this builder");
            }
            kept.push_back(*it);
        }
        checks = kept;
    }
    rep.checks = checks;
    rep.doc["checks"] = checks_json(checks);
    timing();
    bool pass = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
    return finish(rep, pass ? "pass" : "fail", pass ? ExitPass : ExitCheckFailure, "");
}

Report run_json(const json& config, const RunOptions& opts)
{
    try {
        return run(parse_config(config), opts);
    } catch (const ConfigError& e) {
        Report rep;
        rep.doc = {{"schema", kReportSchema}, {"convention", kChevalleyConvention}, {"config", config}};
        return finish(rep, "config_error", ExitConfig, e.what());
    }
}

FaultSites fault_sites(const JobConfig& config)
{
    JobConfig c = config;
    c.fault.reset();
    auto job = build_job(c);
    FaultSites f;
    if (!job.s) return f;
    f.structure_constants = static_cast<int>(constant_sites(*job.s->alg).size());
    f.eigenvalues = static_cast<int>(eigen_sites(*job.s->alg, job.s->W, c.times).size());
    return f;
}

json Summary::to_json() const
{
    json j = {{"schema", kReportSchema}, {"jobs", jobs}, {"ok", ok}, {"exit_code", exit_code}};
    j["failures"] = failures;
    json rs = json::array();
    for (std::size_t k = 0; k < reports.size(); ++k)
        rs.push_back({{"name", names[k]}, {"status", reports[k].status}, {"exit_code", reports[k].exit_code}});
    j["results"] = rs;
    return j;
}

std::vector<json> manifest_jobs(const json& manifest)
{
    if (manifest.is_array()) return manifest.get<std::vector<json>>();
    if (manifest.is_object() && manifest.contains("jobs") && manifest.at("jobs").is_array())
        return manifest.at("jobs").get<std::vector<json>>();
    throw ConfigError("manifest: expected an array of configs or {\"jobs\": [...]}");
}

std::string job_name(const json& config, std::size_t position)
{
    if (config.is_object() && config.contains("name") && config.at("name").is_string())
        return config.at("name").get<std::string>();
    std::string b = config.is_object() && config.contains("builder") && config.at("builder").is_string()
                        ? config.at("builder").get<std::string>()
                        : "job";
    std::string a = config.is_object() && config.contains("algebra") && config.at("algebra").is_string()
                        ? config.at("algebra").get<std::string>()
                        : "";
    return std::to_string(position) + "-" + b + (a.empty() ? "" : "-" + a);
}

void write_atomic(const std::string& path, const std::string& text)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename " + tmp);
}

Summary verify_all(const std::vector<json>& manifest, const ManifestOptions& opts)
{
    Summary sum;
    sum.jobs = static_cast<int>(manifest.size());
    sum.reports.resize(manifest.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < manifest.size(); k = next++) {
            sum.reports[k] = run_json(manifest[k], opts.run);
            const auto& c = manifest[k];
            if (c.is_object() && c.contains("output") && c.at("output").is_string())
                write_atomic(c.at("output").get<std::string>(), sum.reports[k].text());
        }
    };
    int n = std::max(1, std::min<int>(opts.jobs, static_cast<int>(manifest.size())));
    std::vector<std::thread> pool;
    for (int i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = ExitPass;
    for (std::size_t k = 0; k < manifest.size(); ++k) {
        const auto& rep = sum.reports[k];
        std::string name = job_name(manifest[k], k);
        sum.names.push_back(name);
        std::string expect = "pass";
        if (manifest[k].is_object() && manifest[k].contains("expect") && manifest[k].at("expect").is_string())
            expect = manifest[k].at("expect").get<std::string>();
        std::string reason;
        if (rep.status != expect) {
            reason = rep.status + " (expected " + expect + ")";
            if (rep.doc.contains("error")) reason += ": " + rep.doc.at("error").get<std::string>();
            for (const auto& c : rep.checks)
                if (!c.pass) {
                    reason += ": " + c.name + (c.witness.empty() ? "" : " [" + c.witness + "]");
                    break;
                }
        }
        if (reason.empty() && !opts.golden_dir.empty()) {
            std::string path = opts.golden_dir + "/" + name + ".json";
            if (opts.update_golden) {
                write_atomic(path, rep.text());
            } else {
                std::ifstream f(path, std::ios::binary);
                std::stringstream ss;
                ss << f.rdbuf();
                if (!f)
                    reason = "missing golden file " + path;
                else if (ss.str() != rep.text())
                    reason = "report differs from golden file " + path;
            }
        }
        if (reason.empty()) {
            ++sum.ok;
        } else {
            sum.failures.push_back(name + ": " + reason);
            code = std::max(code, rep.exit_code == ExitPass ? static_cast<int>(ExitCheckFailure) : rep.exit_code);
        }
    }
    sum.exit_code = code;
    return sum;
}

} // namespace bilie
