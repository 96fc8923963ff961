// qcq: capacities of unital qubit channels and GAD channels, queue-channel
// capacities per unit time, and end-to-end encode/decode simulation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcq/capacity.hpp"
#include "qcq/channels.hpp"
#include "qcq/queue_capacity.hpp"
#include "qcq/queueing.hpp"
#include "qcq/simulator.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config file not found: " + path);
    json j;
    in >> j;
    return j;
}

struct ChannelSpec {
    enum class Type { pauli, gad, gad_family } type;
    double p1 = 0, p2 = 0, p3 = 0;  // pauli
    double p = 0, n = 0;            // gad
    double kappa = 0;               // gad-family
};

ChannelSpec parse_channel(const json& j) {
    if (!j.contains("type")) throw std::runtime_error("channel spec: missing \"type\"");
    ChannelSpec spec;
    std::string type = j.at("type");
    if (type == "pauli") {
        spec.type = ChannelSpec::Type::pauli;
        auto p = j.at("p");
        if (!p.is_array() || p.size() != 3) {
            throw std::runtime_error("channel spec: pauli needs p = [p1,p2,p3]");
        }
        spec.p1 = p[0];
        spec.p2 = p[1];
        spec.p3 = p[2];
    } else if (type == "gad") {
        spec.type = ChannelSpec::Type::gad;
        spec.p = j.at("p");
        spec.n = j.at("n");
    } else if (type == "gad-family") {
        spec.type = ChannelSpec::Type::gad_family;
        spec.kappa = j.at("kappa");
    } else {
        throw std::runtime_error("channel spec: unknown type \"" + type + "\"");
    }
    return spec;
}

qcq::Distribution parse_dist(const json& j) {
    std::string kind = j.at("kind");
    if (kind == "exponential") return qcq::Distribution::exponential(j.at("rate"));
    if (kind == "deterministic") return qcq::Distribution::deterministic(j.at("value"));
    if (kind == "gamma") return qcq::Distribution::gamma(j.at("shape"), j.at("rate"));
    if (kind == "uniform") return qcq::Distribution::uniform(j.at("lo"), j.at("hi"));
    throw std::runtime_error("distribution: unknown kind \"" + kind + "\"");
}

qcq::QueueModel parse_queue(const json& j) {
    return {parse_dist(j.at("arrival")), parse_dist(j.at("service"))};
}

// "deterministic" | "exponential" | "gamma:<shape>" | "uniform", scaled to mean m.
qcq::Distribution dist_with_mean(const std::string& name, double m) {
    if (name == "deterministic") return qcq::Distribution::deterministic(m);
    if (name == "exponential") return qcq::Distribution::exponential(1.0 / m);
    if (name.rfind("gamma", 0) == 0) {
        double shape = 2.0;
        auto pos = name.find(':');
        if (pos != std::string::npos) shape = std::stod(name.substr(pos + 1));
        return qcq::Distribution::gamma(shape, shape / m);
    }
    if (name == "uniform") return qcq::Distribution::uniform(0.0, 2.0 * m);
    throw std::runtime_error("unknown distribution name \"" + name + "\"");
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

// Closed-form stationary sojourn transform, when the queue admits one.
std::optional<qcq::LaplaceFn> transform_for(const qcq::QueueModel& q) {
    using Kind = qcq::Distribution::Kind;
    double lambda = q.arrival_rate();
    double mu = q.service_rate();
    if (q.arrival.kind() == Kind::exponential && q.service.kind() == Kind::exponential) {
        return qcq::LaplaceFn([lambda, mu](double s) { return qcq::mm1_laplace(s, lambda, mu); });
    }
    if (q.arrival.kind() == Kind::exponential) {
        auto service = q.service;
        return qcq::LaplaceFn(
            [lambda, service](double s) { return qcq::mg1_laplace(s, lambda, service); });
    }
    if (q.service.kind() == Kind::exponential) {
        auto arrival = q.arrival;
        return qcq::LaplaceFn(
            [arrival, mu](double s) { return qcq::gm1_laplace(s, arrival, mu); });
    }
    return std::nullopt;
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

double gad_p_star(double n) {
    double m = std::min(n, 1.0 - n);
    double base = 2.0 * (std::sqrt(2.0) - 1.0);
    if (m < 1e-12) return 1.0;
    double t = (std::sqrt(1.0 + 4.0 * m * (1.0 - m)) - 1.0) / (2.0 * m * (1.0 - m));
    return std::max(base, std::min(t, 1.0));
}

struct CommonOpts {
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;
    std::string out;
    std::string format = "csv";
    std::string config;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--threads", opts.threads, "worker thread cap");
    cmd->add_option("--out", opts.out, "output file (default: stdout)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", opts.config, "JSON config file; flags win");
}

int cmd_chan_info(const CommonOpts& opts, std::string channel_arg) {
    json cfg = load_config(opts.config);
    if (channel_arg.empty() && cfg.contains("channel")) channel_arg = cfg["channel"].dump();
    if (channel_arg.empty()) throw std::runtime_error("chan info: missing --channel");
    ChannelSpec spec = parse_channel(json::parse(channel_arg));

    json j;
    if (spec.type == ChannelSpec::Type::pauli) {
        qcq::PauliChannel ch(spec.p1, spec.p2, spec.p3);
        auto lam = ch.attenuation();
        auto code = qcq::optimal_code(ch);
        j["type"] = "pauli";
        j["p"] = {spec.p1, spec.p2, spec.p3};
        j["lambda"] = {lam[0], lam[1], lam[2]};
        j["m_phi"] = qcq::m_phi(ch);
        j["axis"] = code.axis;
        j["chi"] = qcq::unital_capacity(ch);
        j["unital"] = true;
    } else if (spec.type == ChannelSpec::Type::gad) {
        qcq::GadChannel ch(spec.p, spec.n);
        auto sol = qcq::gad_holevo(spec.p, spec.n);
        j["type"] = "gad";
        j["p"] = spec.p;
        j["n"] = spec.n;
        j["chi"] = sol.chi;
        j["z_star"] = sol.z_star;
        j["unital"] = qcq::is_unital(ch);
        j["entanglement_breaking"] = qcq::is_entanglement_breaking(ch);
        if (qcq::is_unital(ch)) {
            auto pc = qcq::gad_to_pauli(spec.p);
            auto lam = pc.attenuation();
            j["lambda"] = {lam[0], lam[1], lam[2]};
            j["m_phi"] = qcq::m_phi(pc);
            j["axis"] = qcq::optimal_code(pc).axis;
        }
    } else {
        j["type"] = "gad-family";
        j["kappa"] = spec.kappa;
        auto fam = qcq::ChannelFamily::symmetric_gad(spec.kappa);
        std::vector<double> grid;
        for (int i = 0; i <= 20; ++i) grid.push_back(0.5 * i);
        j["pauli_ordered"] = qcq::is_pauli_ordered(fam, grid);
        j["waiting_invariant_axis"] = qcq::waiting_invariant_axis(fam, grid);
    }

    if (opts.format == "json") {
        write_text(opts.out, j.dump(2) + "\n");
    } else {
        std::ostringstream csv;
        csv << "key,value\r\n";
        for (auto& [k, v] : j.items()) {
            std::string d = v.is_string() ? v.get<std::string>() : v.dump();
            if (d.find(',') != std::string::npos || d.find('"') != std::string::npos) {
                std::string esc = "\"";
                for (char c : d) esc += (c == '"') ? std::string("\"\"") : std::string(1, c);
                d = esc + "\"";
            }
            csv << k << ',' << d << "\r\n";
        }
        write_text(opts.out, csv.str());
    }
    return 0;
}

int cmd_gadc_sweep(const CommonOpts& opts, double p_min, double p_max, int p_steps,
                   const std::string& n_list) {
    std::vector<double> ns = parse_list(n_list);
    if (ns.empty() || p_steps < 2 || p_max < p_min) {
        throw std::runtime_error("gadc sweep: invalid ranges");
    }
    json rows = json::array();
    std::ostringstream csv;
    csv << "p,n,chi,c_n1,c_n2,c_n3,delta,p_star,is_eb\r\n";
    for (double n : ns) {
        double p_star = gad_p_star(n);
        for (int i = 0; i < p_steps; ++i) {
            double p = p_min + (p_max - p_min) * i / (p_steps - 1);
            auto rep = qcq::induced_report(p, n);
            if (rep.delta < -1e-9) {
                throw std::runtime_error("gadc sweep: internal invariant delta >= 0 violated");
            }
            bool eb = qcq::is_entanglement_breaking(qcq::GadChannel(p, n));
            csv << num(p) << ',' << num(n) << ',' << num(rep.chi) << ',' << num(rep.c_n1) << ','
                << num(rep.c_n2) << ',' << num(rep.c_n3) << ',' << num(rep.delta) << ','
                << num(p_star) << ',' << (eb ? 1 : 0) << "\r\n";
            rows.push_back({{"p", p},
                            {"n", n},
                            {"chi", rep.chi},
                            {"c_n1", rep.c_n1},
                            {"c_n2", rep.c_n2},
                            {"c_n3", rep.c_n3},
                            {"delta", rep.delta},
                            {"p_star", p_star},
                            {"is_eb", eb}});
        }
    }
    write_text(opts.out, opts.format == "json" ? rows.dump(2) + "\n" : csv.str());
    return 0;
}

int cmd_queue_capacity(const CommonOpts& opts, std::string queue_arg, double kappa,
                       const std::string& method, std::size_t samples) {
    json cfg = load_config(opts.config);
    if (queue_arg.empty() && cfg.contains("queue")) queue_arg = cfg["queue"].dump();
    if (queue_arg.empty()) throw std::runtime_error("queue capacity: missing --queue");
    qcq::QueueModel queue = parse_queue(json::parse(queue_arg));
    if (!queue.stable()) throw std::runtime_error("queue capacity: unstable queue (lambda >= mu)");

    auto family = qcq::ChannelFamily::symmetric_gad(kappa);
    json j;
    j["lambda"] = queue.arrival_rate();
    j["mu"] = queue.service_rate();
    j["kappa"] = kappa;

    bool want_series = method == "series" || method == "both";
    bool want_mc = method == "mc" || method == "both";
    auto transform = transform_for(queue);
    if (want_series && !transform) {
        if (method == "series") {
            throw std::runtime_error(
                "queue capacity: no closed-form transform for this queue; use --method mc");
        }
        want_series = false;
    }
    if (want_series) {
        auto res = qcq::capacity_series(queue.arrival_rate(), kappa, *transform);
        j["series"] = {{"capacity", res.capacity}, {"tail_bound", res.tail_bound}};
    }
    if (want_mc) {
        auto sample = qcq::lindley_simulate(queue, samples, qcq::kDefaultBurnIn, opts.seed);
        qcq::QueueChannelSpec spec{queue, family, qcq::EvalMethod::monte_carlo};
        auto res = qcq::capacity_expectation(spec, sample);
        j["monte_carlo"] = {{"capacity", res.capacity},
                            {"std_error", res.std_error},
                            {"samples", samples},
                            {"seed", opts.seed}};
    }
    if (j.contains("series") && j.contains("monte_carlo")) {
        double diff = std::abs(double(j["series"]["capacity"]) -
                               double(j["monte_carlo"]["capacity"]));
        double se = j["monte_carlo"]["std_error"];
        j["agreement"] = {{"abs_diff", diff}, {"within_3se", diff <= 3.0 * se}};
    }
    write_text(opts.out, j.dump(2) + "\n");
    return 0;
}

int cmd_lambda_sweep(const CommonOpts& opts, double mu, const std::string& kappa_list,
                     const std::string& queue_kind, int points) {
    std::vector<double> kappas = parse_list(kappa_list);
    if (kappas.empty()) throw std::runtime_error("sweep-lambda: empty kappa list");

    qcq::LaplaceFamily family;
    if (queue_kind == "mm1") family = qcq::mm1_template(mu);
    else if (queue_kind == "md1") family = qcq::md1_template(mu);
    else if (queue_kind == "dm1") family = qcq::dm1_template(mu);
    else throw std::runtime_error("sweep-lambda: unknown queue kind \"" + queue_kind + "\"");

    std::ostringstream csv;
    csv << "kappa,lambda,capacity\r\n";
    json summary = json::array();
    // kappa = 0 baseline: capacity = lambda, no buffering penalty
    for (int i = 1; i <= points; ++i) {
        double lambda = mu * static_cast<double>(i) / (points + 1);
        csv << num(0.0) << ',' << num(lambda) << ',' << num(lambda) << "\r\n";
    }
    for (double kappa : kappas) {
        auto sweep = qcq::optimize_lambda(mu, kappa, family, points);
        for (const auto& pt : sweep.points) {
            csv << num(kappa) << ',' << num(pt.lambda) << ',' << num(pt.capacity) << "\r\n";
        }
        summary.push_back({{"kappa", kappa},
                           {"lambda_star", sweep.lambda_star},
                           {"capacity_star", sweep.capacity_star}});
    }
    if (opts.format == "json") {
        json j;
        j["optima"] = summary;
        write_text(opts.out, j.dump(2) + "\n");
    } else {
        write_text(opts.out, csv.str());
        std::cout << json({{"optima", summary}}).dump(2) << "\n";
    }
    return 0;
}

int cmd_compare(const CommonOpts& opts, double lambda, double mu, double kappa,
                const std::string& dist_names, bool service_side) {
    auto names = split_names(dist_names);
    if (names.empty()) throw std::runtime_error("compare: empty distribution list");
    double mean = service_side ? 1.0 / mu : 1.0 / lambda;
    std::vector<qcq::Distribution> dists;
    for (const auto& n : names) dists.push_back(dist_with_mean(n, mean));
    auto ranking = service_side ? qcq::compare_service_dists(lambda, mu, kappa, dists)
                                : qcq::compare_arrival_dists(lambda, mu, kappa, dists);
    std::ostringstream csv;
    csv << "rank,dist,capacity\r\n";
    json rows = json::array();
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        csv << (i + 1) << ',' << ranking[i].dist.name() << ',' << num(ranking[i].capacity)
            << "\r\n";
        rows.push_back({{"rank", i + 1},
                        {"dist", ranking[i].dist.name()},
                        {"capacity", ranking[i].capacity}});
    }
    write_text(opts.out, opts.format == "json" ? rows.dump(2) + "\n" : csv.str());
    return 0;
}

int cmd_simulate(const CommonOpts& opts, std::string queue_arg, double kappa,
                 std::size_t n_bits, const std::string& mode) {
    json cfg = load_config(opts.config);
    if (queue_arg.empty() && cfg.contains("queue")) queue_arg = cfg["queue"].dump();
    if (queue_arg.empty()) throw std::runtime_error("simulate: missing --queue");

    qcq::SimConfig sim;
    sim.spec.queue = parse_queue(json::parse(queue_arg));
    sim.spec.family = qcq::ChannelFamily::symmetric_gad(kappa);
    sim.n_bits = n_bits;
    sim.seed = opts.seed;
    sim.threads = opts.threads;
    sim.mode = mode == "aware" ? qcq::EncoderMode::waiting_aware : qcq::EncoderMode::blind;

    auto report = qcq::run_end_to_end(sim);
    double rate = qcq::estimate_rate(report, report.lambda);

    std::ostringstream csv;
    csv << "bucket_lo,bucket_hi,n,flips,crossover,ci_lo,ci_hi,predicted\r\n";
    for (const auto& b : report.buckets) {
        csv << num(b.lo) << ',' << num(b.hi) << ',' << b.n << ',' << b.flips << ','
            << num(b.crossover) << ',' << num(b.ci_lo) << ',' << num(b.ci_hi) << ','
            << num(b.predicted) << "\r\n";
    }
    json summary;
    summary["total_qubits"] = report.total;
    summary["total_flips"] = report.total_flips;
    summary["seed"] = report.seed;
    summary["lambda"] = report.lambda;
    summary["kappa"] = kappa;
    summary["mode"] = mode;
    summary["estimated_rate"] = rate;
    summary["empty_buckets"] = report.empty_buckets;

    if (opts.out.empty()) {
        std::cout << csv.str() << summary.dump(2) << "\n";
    } else {
        write_text(opts.out + ".csv", csv.str());
        write_text(opts.out + ".json", summary.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacities of unital qubit and GAD queue-channels"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string channel_arg, queue_arg, method = "series", mode = "blind";
    std::string n_list = "0.1,0.2,0.3,0.4,0.5", kappa_list = "0.1,0.5";
    std::string queue_kind = "mm1", dist_names = "deterministic,exponential";
    double p_min = 0.0, p_max = 1.0, kappa = 0.0, mu = 1.0, lambda = 0.5;
    int p_steps = 51, points = 200;
    std::size_t samples = 1000000, n_bits = 1000000;

    auto* chan = app.add_subcommand("chan", "channel-level commands");
    auto* info = chan->add_subcommand("info", "report channel invariants and capacity");
    info->add_option("--channel", channel_arg, "channel spec JSON");
    add_common(info, opts);

    auto* gadc = app.add_subcommand("gadc", "GAD channel sweeps");
    auto* sweep = gadc->add_subcommand("sweep", "chi and induced-channel capacities over (p,n)");
    sweep->add_option("--p-min", p_min);
    sweep->add_option("--p-max", p_max);
    sweep->add_option("--p-steps", p_steps);
    sweep->add_option("--n", n_list, "comma-separated n values");
    add_common(sweep, opts);

    auto* queue = app.add_subcommand("queue", "queue-channel commands");
    auto* qcap = queue->add_subcommand("capacity", "capacity per unit time of a queue-channel");
    qcap->add_option("--queue", queue_arg, "queue spec JSON");
    qcap->add_option("--kappa", kappa, "decoherence rate");
    qcap->add_option("--method", method)->check(CLI::IsMember({"series", "mc", "both"}));
    qcap->add_option("--samples", samples, "Monte Carlo sample count");
    add_common(qcap, opts);

    auto* lsweep = queue->add_subcommand("sweep-lambda", "capacity vs arrival rate");
    lsweep->add_option("--mu", mu);
    lsweep->add_option("--kappa", kappa_list, "comma-separated kappa values");
    lsweep->add_option("--queue-kind", queue_kind)->check(CLI::IsMember({"mm1", "md1", "dm1"}));
    lsweep->add_option("--points", points);
    add_common(lsweep, opts);

    auto* cserv = queue->add_subcommand("compare-service", "rank M/G/1 service distributions");
    cserv->add_option("--lambda", lambda);
    cserv->add_option("--mu", mu);
    cserv->add_option("--kappa", kappa);
    cserv->add_option("--dists", dist_names);
    add_common(cserv, opts);

    auto* carr = queue->add_subcommand("compare-arrival", "rank G/M/1 arrival distributions");
    carr->add_option("--lambda", lambda);
    carr->add_option("--mu", mu);
    carr->add_option("--kappa", kappa);
    carr->add_option("--dists", dist_names);
    add_common(carr, opts);

    auto* sim = app.add_subcommand("simulate", "end-to-end encode/decode Monte Carlo");
    sim->add_option("--queue", queue_arg, "queue spec JSON");
    sim->add_option("--kappa", kappa, "decoherence rate");
    sim->add_option("--bits", n_bits, "number of encoded bits");
    sim->add_option("--mode", mode)->check(CLI::IsMember({"blind", "aware"}));
    add_common(sim, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return cmd_chan_info(opts, channel_arg);
        if (sweep->parsed()) return cmd_gadc_sweep(opts, p_min, p_max, p_steps, n_list);
        if (qcap->parsed()) return cmd_queue_capacity(opts, queue_arg, kappa, method, samples);
        if (lsweep->parsed()) return cmd_lambda_sweep(opts, mu, kappa_list, queue_kind, points);
        if (cserv->parsed()) return cmd_compare(opts, lambda, mu, kappa, dist_names, true);
        if (carr->parsed()) return cmd_compare(opts, lambda, mu, kappa, dist_names, false);
        if (sim->parsed()) return cmd_simulate(opts, queue_arg, kappa, n_bits, mode);
    } catch (const std::exception& e) {
        std::cerr << json({{"error", e.what()}}).dump() << "\n";
        return 1;
    }
    std::cerr << json({{"error", "no subcommand"}}).dump() << "\n";
    return 1;
}
