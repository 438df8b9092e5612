// Certificate file format (hqd-cert-v1 JSON), DOT export and a plain text
// rendering. Serialization is canonical: cycles in construction order, each
// starting from its lexicographically least rotation with the smaller
// neighbor second.
#pragma once

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hqd/cycles.hpp"

namespace hqd {

inline constexpr const char* kCertFormatTag = "hqd-cert-v1";

struct certificate_parse_error : std::runtime_error {
    explicit certificate_parse_error(const std::string& what) : std::runtime_error(what) {}
};

// labels_binary renders vertices in the string form (leftmost = coordinate 1)
// for comparison against printed listings; integers are the default.
inline nlohmann::json certificate_to_json(const PartitionedDecomposition& d,
                                          bool labels_binary = false) {
    nlohmann::json j;
    j["format"] = kCertFormatTag;
    j["n"] = d.host_n;
    j["cycle_length"] = d.cycle_length;
    j["cycles"] = nlohmann::json::array();
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
        nlohmann::json jc;
        jc["id"] = i;
        jc["partition_set"] = d.set_of[i];
        CycleSeq canon = canonical_rotation(d.cycles[i]);
        if (labels_binary) {
            std::vector<std::string> verts;
            verts.reserve(canon.vertices.size());
            for (Vertex v : canon.vertices) verts.push_back(label_to_string(v, d.host_n));
            jc["vertices"] = verts;
        } else {
            jc["vertices"] = canon.vertices;
        }
        j["cycles"].push_back(std::move(jc));
    }
    return j;
}

inline std::string serialize_certificate(const PartitionedDecomposition& d,
                                         bool labels_binary = false) {
    return certificate_to_json(d, labels_binary).dump(2) + "\n";
}

inline PartitionedDecomposition certificate_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || j.value("format", "") != kCertFormatTag)
            throw certificate_parse_error("missing or unknown format tag");
        PartitionedDecomposition d;
        d.host_n = j.at("n").get<int>();
        if (d.host_n < 1 || d.host_n > kMaxDim)
            throw certificate_parse_error("n out of range");
        d.cycle_length = j.at("cycle_length").get<std::size_t>();
        for (const auto& jc : j.at("cycles")) {
            CycleSeq c;
            c.host_n = d.host_n;
            const auto& verts = jc.at("vertices");
            if (!verts.is_array() || verts.empty())
                throw certificate_parse_error("cycle with empty vertex list");
            for (const auto& v : verts) {
                Vertex x = v.is_string() ? label_from_string(v.get<std::string>())
                                         : v.get<Vertex>();
                if (x >= vertex_count(d.host_n))
                    throw certificate_parse_error("vertex label out of range");
                c.vertices.push_back(x);
            }
            d.cycles.push_back(std::move(c));
            d.set_of.push_back(jc.at("partition_set").get<int>());
            if (d.set_of.back() < 0) throw certificate_parse_error("negative partition set id");
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw certificate_parse_error(e.what());
    } catch (const std::invalid_argument& e) {
        throw certificate_parse_error(e.what());
    }
}

inline PartitionedDecomposition read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw certificate_parse_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw certificate_parse_error(e.what());
    }
    return certificate_from_json(j);
}

// One color per cycle, one style per partition set.
inline void write_dot(std::ostream& os, const PartitionedDecomposition& d) {
    static const char* palette[] = {"red",      "blue",    "forestgreen", "orange",
                                    "purple",   "brown",   "deeppink",    "cadetblue",
                                    "darkcyan", "gold3",   "indigo",      "salmon3",
                                    "navy",     "olive",   "firebrick",   "turquoise4"};
    static const char* styles[] = {"solid", "dashed", "dotted", "bold", "tapered"};
    os << "graph hqd {\n";
    for (Vertex v = 0; v < vertex_count(d.host_n); ++v)
        os << "  \"" << label_to_string(v, d.host_n) << "\";\n";
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
        const auto& verts = d.cycles[i].vertices;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            Edge e = make_edge(verts[k], verts[(k + 1) % verts.size()]);
            os << "  \"" << label_to_string(e.a, d.host_n) << "\" -- \""
               << label_to_string(e.b, d.host_n) << "\" [color=" << palette[i % 16]
               << ", style=" << styles[static_cast<std::size_t>(d.set_of[i]) % 5] << "];\n";
        }
    }
    os << "}\n";
}

inline void write_text(std::ostream& os, const PartitionedDecomposition& d) {
    os << "n " << d.host_n << " cycle_length " << d.cycle_length << " cycles "
       << d.cycles.size() << " sets " << d.num_sets() << "\n";
    for (std::size_t i = 0; i < d.cycles.size(); ++i) {
        os << "cycle " << i << " set " << d.set_of[i] << ":";
        CycleSeq canon = canonical_rotation(d.cycles[i]);
        for (Vertex v : canon.vertices) os << " " << label_to_string(v, d.host_n);
        os << "\n";
    }
}

}  // namespace hqd
