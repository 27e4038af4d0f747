#include "spclass/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace spc {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

WeightSystem parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("instance parse error: ") + e.what());
    }
    if (!j.contains("d") || !j["d"].is_array()) throw input_error("missing dimension list 'd'");
    std::vector<long> dims;
    for (auto& x : j["d"]) dims.push_back(x.get<long>());
    if (j.contains("r") && j["r"].get<int>() != static_cast<int>(dims.size()))
        throw input_error("'r' disagrees with the length of 'd'");
    if (!j.contains("weights") || !j["weights"].is_array())
        throw input_error("missing weight list 'weights'");
    std::vector<Weight> weights;
    for (auto& row : j["weights"]) {
        std::vector<int> e;
        for (auto& x : row) e.push_back(x.get<int>());
        if (e.size() != dims.size()) throw input_error("weight length disagrees with 'd'");
        auto w = try_classify_weight(e);
        if (!w) {
            Weight tmp{e, WType::I};
            throw input_error("not a weight vector: " + tmp.str());
        }
        weights.push_back(*w);
    }
    bool connected = true;
    if (j.contains("k_connected")) connected = j["k_connected"].get<bool>();
    WeightSystem ws(DimVector(dims), std::move(weights), connected);
    if (j.contains("A")) {
        for (auto& [key, value] : j["A"].items()) {
            std::vector<int> e;
            std::stringstream ss(key);
            std::string tok;
            while (std::getline(ss, tok, ',')) e.push_back(std::stoi(tok));
            if (e.size() != dims.size()) throw input_error("bad coefficient key " + key);
            Rat a = value.is_string() ? parse_rational(value.get<std::string>())
                                      : parse_rational(value.dump());
            ws.set_a(e, a);
        }
    }
    return ws;
}

WeightSystem load_instance(const std::string& path) {
    return parse_instance_text(read_file(path));
}

std::string instance_to_json(const WeightSystem& ws) {
    json j;
    j["r"] = ws.r();
    j["d"] = ws.d.dims();
    json w = json::array();
    for (const Weight& x : ws.weights) w.push_back(x.entries);
    j["weights"] = w;
    j["k_connected"] = ws.k_connected;
    if (ws.a_values) {
        json a = json::object();
        for (auto& [e, val] : *ws.a_values) {
            std::string key;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i) key += ",";
                key += std::to_string(e[i]);
            }
            a[key] = to_string(val);
        }
        j["A"] = a;
    }
    return j.dump(2);
}

SupportSet parse_support_text(const std::string& text, int r) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("support parse error: ") + e.what());
    }
    if (!j.contains("support") || !j["support"].is_array())
        throw input_error("missing 'support' array");
    SupportSet out;
    for (auto& row : j["support"]) {
        std::vector<Rat> e;
        for (auto& x : row)
            e.push_back(x.is_string() ? parse_rational(x.get<std::string>())
                                      : parse_rational(x.dump()));
        if (static_cast<int>(e.size()) != r) throw input_error("support point length mismatch");
        out.points.push_back(QVector(std::move(e)));
    }
    return out;
}

SupportSet load_support(const std::string& path, int r) {
    return parse_support_text(read_file(path), r);
}

}  // namespace spc
