#include "inscribe/trace_io.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "inscribe/error.hpp"
#include "inscribe/solver.hpp"

namespace inscribe {

using nlohmann::ordered_json;

void write_trace_file(std::ostream& out, const TraceFileHeader& header, const Trace& trace) {
    ordered_json h;
    h["record"] = "header";
    h["problem"] = header.problem_path;
    h["solver"] = header.solver;
    h["epsilon"] = header.epsilon;
    h["domain_scale"] = header.domain_scale;
    if (header.initial_threshold) h["initial_threshold"] = *header.initial_threshold;
    h["threads"] = header.threads;
    out << h.dump() << '\n';
    for (const TraceEvent& e : trace.events) {
        ordered_json j;
        j["record"] = "event";
        j["event"] = to_string(e.kind);
        j["t"] = e.t;
        j["delta"] = e.delta;
        j["active"] = e.active;
        j["seconds"] = e.seconds;
        switch (e.kind) {
            case TraceEventKind::Accuracy:
                j["dprime"] = e.dprime;
                j["complete"] = e.complete;
                break;
            case TraceEventKind::Prune: j["removed"] = e.removed; break;
            case TraceEventKind::Done:
                j["value"] = e.value;
                j["point"] = e.point;
                j["certificate"] = e.certificate;
                break;
            default: break;
        }
        out << j.dump() << '\n';
    }
}

TraceFileHeader read_trace_header(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open trace file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path + ": empty trace file");
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (j.value("record", "") != std::string("header"))
        throw ParseError(path + ": first record must be the trace header");
    TraceFileHeader h;
    try {
        h.problem_path = j.at("problem").get<std::string>();
        h.solver = j.at("solver").get<std::string>();
        h.epsilon = j.value("epsilon", 1e-3);
        h.domain_scale = j.value("domain_scale", 0.6);
        if (j.contains("initial_threshold")) h.initial_threshold = j.at("initial_threshold").get<double>();
        h.threads = j.value("threads", 1);
    } catch (const ordered_json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return h;
}

}  // namespace inscribe
