#include "bilie/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

json int_list(const std::string& s)
{
    json a = json::array();
    for (const auto& x : split(s)) a.push_back(std::stoi(x));
    return a;
}

json string_list(const std::string& s)
{
    json a = json::array();
    for (const auto& x : split(s)) a.push_back(x);
    return a;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bi-Lie structure builder and verifier"};
    std::string config_path, check_list, golden_dir, out_path;
    bool update_golden = false, emit_structure = false, timing = false;
    int jobs = 1;
    std::vector<std::string> words;
    std::string type, times, b0, s, x, a, side, first, diag, cartan;
    int rank = 0;
    bool centre_second = false;

    app.add_option("--config", config_path, "job config or manifest (JSON)");
    app.add_option("--check", check_list, "comma-separated check names to run");
    app.add_option("--golden", golden_dir, "directory of golden reports for bit-exact comparison");
    app.add_flag("--update-golden", update_golden, "write golden reports instead of comparing");
    app.add_option("--jobs", jobs, "concurrent jobs for a manifest")->check(CLI::PositiveNumber);
    app.add_flag("--emit-structure", emit_structure, "include structure constants and operators in reports");
    app.add_flag("--timing", timing, "include wall time in reports (breaks byte-identical output)");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("job", words, "builder, e.g. ex12.13 or class2 parabolic");
    app.add_option("--type", type, "algebra tag, e.g. A3, E7, so5");
    app.add_option("--rank", rank, "rank, for catalog entries of a fixed family");
    app.add_option("--times", times, "comma-separated times");
    app.add_option("--b0", b0, "simple roots of the Levi factor, 1-based");
    app.add_option("--s", s, "Kac coordinates s_0,...,s_n");
    app.add_option("--x", x, "free parameter of the E7 example");
    app.add_option("--a", a, "parameter a of the A_n example with n times");
    app.add_option("--side", side, "first or second: which time owns the grading's even part");
    app.add_option("--first", first, "indices of the simple factors placed in g0^1");
    app.add_flag("--centre-second", centre_second, "put the centre of g0 into g0^2");
    app.add_option("--diag", diag, "diagonal of A for matrix.so");
    app.add_option("--cartan", cartan, "Cartan part of g_{t1t1} for ex12.18");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : bilie::ExitConfig;
    }

    bilie::ManifestOptions mo;
    mo.run.timing = timing;
    mo.run.emit_structure = emit_structure;
    mo.run.checks = split(check_list);
    mo.golden_dir = golden_dir;
    mo.update_golden = update_golden;
    mo.jobs = jobs;

    json config;
    if (!config_path.empty()) {
        std::ifstream f(config_path);
        if (!f) {
            std::cerr << "cannot read " << config_path << "\n";
            return bilie::ExitConfig;
        }
        try {
            config = json::parse(f);
        } catch (const json::parse_error& e) {
            std::cerr << "malformed JSON: " << e.what() << "\n";
            return bilie::ExitConfig;
        }
    } else if (!words.empty()) {
        std::string builder = words[0];
        for (std::size_t k = 1; k < words.size(); ++k) builder += "." + words[k];
        static const std::map<std::string, std::string> family{{"ex12.13", "B"}, {"ex12.14", "D"}, {"ex12.15", "C"},
                                                               {"ex12.16", "A"}, {"ex12.17", "A"}, {"ex12.18", "B"}};
        config["builder"] = builder;
        if (!type.empty())
            config["algebra"] = type;
        else if (builder == "class2.e7")
            config["algebra"] = "E7";
        else if (family.count(builder) && rank > 0)
            config["algebra"] = family.at(builder) + std::to_string(rank);
        if (!times.empty()) config["times"] = string_list(times);
        try {
            if (!b0.empty()) config["b0"] = int_list(b0);
            if (!s.empty()) config["s"] = int_list(s);
            if (!first.empty()) config["first"] = int_list(first);
        } catch (const std::logic_error&) {
            std::cerr << "expected comma-separated integers\n";
            return bilie::ExitConfig;
        }
        if (!x.empty()) config["x"] = x;
        if (!a.empty()) config["a"] = a;
        if (!side.empty()) config["side"] = side;
        if (!diag.empty()) config["diag"] = string_list(diag);
        if (!cartan.empty()) config["cartan"] = string_list(cartan);
        if (centre_second) config["centre_first"] = false;
    } else {
        std::cerr << app.help();
        return bilie::ExitConfig;
    }

    bool manifest = config.is_array() || (config.is_object() && config.contains("jobs"));
    if (manifest) {
        bilie::Summary sum;
        try {
            sum = bilie::verify_all(bilie::manifest_jobs(config), mo);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return bilie::ExitConfig;
        }
        std::string text = sum.to_json().dump(2) + "\n";
        if (out_path.empty())
            std::cout << text;
        else
            bilie::write_atomic(out_path, text);
        for (const auto& f : sum.failures) std::cerr << "FAIL " << f << "\n";
        return sum.exit_code;
    }

    bilie::Report rep;
    if (!golden_dir.empty()) {
        auto sum = bilie::verify_all({config}, mo);
        for (const auto& f : sum.failures) std::cerr << "FAIL " << f << "\n";
        if (sum.exit_code != 0) return sum.exit_code;
        rep = sum.reports[0];
    } else {
        rep = bilie::run_json(config, mo.run);
    }
    std::string dest = !out_path.empty() ? out_path : config.value("output", std::string());
    if (dest.empty())
        std::cout << rep.text();
    else
        bilie::write_atomic(dest, rep.text());
    if (rep.exit_code != 0 && rep.doc.contains("error")) std::cerr << rep.doc.at("error").get<std::string>() << "\n";
    for (const auto& c : rep.checks)
        if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.witness << "\n";
    return rep.exit_code;
}
