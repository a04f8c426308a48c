#include "ridesim/citymap.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ridesim/text.hpp"

namespace ridesim {

MapValidationReport CityMap::validate_records(
    const std::vector<Zone>& zones,
    const std::vector<std::pair<int, int>>& edges) {
    MapValidationReport report;
    std::set<int> ids;
    for (const auto& z : zones) {
        if (!ids.insert(z.zone_id).second)
            report.violations.push_back("duplicate zone id " + std::to_string(z.zone_id));
    }
    std::set<std::pair<int, int>> edge_set;
    for (const auto& [a, b] : edges) {
        if (a == b) {
            report.violations.push_back("self-loop edge at zone " + std::to_string(a));
            continue;
        }
        if (!ids.count(a) || !ids.count(b)) {
            report.violations.push_back("edge " + std::to_string(a) + "->" + std::to_string(b) +
                                        " references unknown zone");
            continue;
        }
        edge_set.emplace(a, b);
    }
    for (const auto& [a, b] : edge_set) {
        if (!edge_set.count({b, a}))
            report.violations.push_back("asymmetric adjacency: " + std::to_string(a) + "->" +
                                        std::to_string(b) + " has no reverse record");
    }
    // Connectivity over the symmetric closure.
    if (!zones.empty()) {
        std::unordered_map<int, std::vector<int>> adj;
        for (const auto& [a, b] : edge_set) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::set<int> seen;
        std::deque<int> queue{zones.front().zone_id};
        seen.insert(zones.front().zone_id);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int nb : adj[cur])
                if (seen.insert(nb).second) queue.push_back(nb);
        }
        if (seen.size() != ids.size()) {
            std::string miss;
            for (int id : ids)
                if (!seen.count(id)) {
                    if (!miss.empty()) miss += ' ';
                    miss += std::to_string(id);
                }
            report.violations.push_back("disconnected graph: unreachable zones " + miss);
        }
    }
    return report;
}

CityMap CityMap::build(std::vector<Zone> zones,
                       const std::vector<std::pair<int, int>>& edges) {
    auto report = validate_records(zones, edges);
    if (!report.ok()) {
        std::string msg = "invalid city map:";
        for (const auto& v : report.violations) msg += "\n  " + v;
        throw std::runtime_error(msg);
    }
    CityMap map;
    std::sort(zones.begin(), zones.end(),
              [](const Zone& a, const Zone& b) { return a.zone_id < b.zone_id; });
    map.zones_ = std::move(zones);
    for (std::size_t i = 0; i < map.zones_.size(); ++i) {
        map.zones_[i].adjacent_ids.clear();
        map.index_[map.zones_[i].zone_id] = static_cast<int>(i);
    }
    std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
    for (const auto& [a, b] : edge_set)
        map.zones_[map.index_.at(a)].adjacent_ids.push_back(b);
    for (auto& z : map.zones_) {
        std::sort(z.adjacent_ids.begin(), z.adjacent_ids.end());
        z.adjacent_ids.erase(std::unique(z.adjacent_ids.begin(), z.adjacent_ids.end()),
                             z.adjacent_ids.end());
    }
    map.compute_paths();
    return map;
}

void CityMap::compute_paths() {
    const int n = static_cast<int>(zones_.size());
    dist_.assign(static_cast<std::size_t>(n) * n, -1);
    hop_.assign(static_cast<std::size_t>(n) * n, -1);
    // BFS per source; neighbors visited in ascending zone_id order so the
    // recorded first hop is the lexicographically smallest shortest path.
    std::vector<int> parent(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        auto* dist = &dist_[static_cast<std::size_t>(s) * n];
        auto* hop = &hop_[static_cast<std::size_t>(s) * n];
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        hop[s] = s;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (int nb_id : zones_[cur].adjacent_ids) {
                int nb = index_.at(nb_id);
                if (dist[nb] != -1) continue;
                dist[nb] = dist[cur] + 1;
                hop[nb] = (cur == s) ? nb : hop[cur];
                queue.push_back(nb);
            }
        }
    }
}

const Zone& CityMap::zone(int zone_id) const {
    auto it = index_.find(zone_id);
    if (it == index_.end())
        throw std::runtime_error("unknown zone id " + std::to_string(zone_id));
    return zones_[it->second];
}

int CityMap::index_of(int zone_id) const {
    auto it = index_.find(zone_id);
    if (it == index_.end())
        throw std::runtime_error("unknown zone id " + std::to_string(zone_id));
    return it->second;
}

const std::vector<int>& CityMap::neighbors(int zone_id) const {
    return zone(zone_id).adjacent_ids;
}

std::vector<int> CityMap::neighborhood(int zone_id) const {
    const Zone& z = zone(zone_id);
    std::vector<int> out;
    out.reserve(z.adjacent_ids.size() + 1);
    bool placed = false;
    for (int nb : z.adjacent_ids) {
        if (!placed && zone_id < nb) {
            out.push_back(zone_id);
            placed = true;
        }
        out.push_back(nb);
    }
    if (!placed) out.push_back(zone_id);
    return out;
}

int CityMap::hop_distance(int from_id, int to_id) const {
    return dist_[static_cast<std::size_t>(index_of(from_id)) * zones_.size() + index_of(to_id)];
}

int CityMap::next_hop(int from_id, int to_id) const {
    int idx = hop_[static_cast<std::size_t>(index_of(from_id)) * zones_.size() + index_of(to_id)];
    return zones_[idx].zone_id;
}

Vec2 trip_direction(int origin_id, int dest_id, const CityMap& map) {
    Vec2 o = map.centroid(origin_id);
    Vec2 d = map.centroid(dest_id);
    return Vec2{d.x - o.x, d.y - o.y};
}

namespace {

constexpr const char* kZoneHeader = "zone_id,centroid_x,centroid_y";
constexpr const char* kEdgeHeader = "zone_id_a,zone_id_b";

struct RawMap {
    std::vector<Zone> zones;
    std::vector<std::pair<int, int>> edges;
};

RawMap parse_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open city map file: " + path);
    RawMap raw;
    std::string line;
    int line_no = 0;
    bool in_edges = false;
    bool saw_zone_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = text::trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t == kZoneHeader) {
            saw_zone_header = true;
            continue;
        }
        if (t == kEdgeHeader) {
            in_edges = true;
            continue;
        }
        if (!saw_zone_header)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected header '" + kZoneHeader + "'");
        auto cols = text::split(t, ',');
        try {
            if (!in_edges) {
                if (cols.size() != 3) throw std::runtime_error("expected 3 columns");
                Zone z;
                z.zone_id = text::to_int(cols[0]);
                z.centroid.x = text::to_double(cols[1]);
                z.centroid.y = text::to_double(cols[2]);
                raw.zones.push_back(z);
            } else {
                if (cols.size() != 2) throw std::runtime_error("expected 2 columns");
                raw.edges.emplace_back(text::to_int(cols[0]), text::to_int(cols[1]));
            }
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return raw;
}

}  // namespace

CityMap load_city_map(const std::string& path) {
    RawMap raw = parse_map_file(path);
    return CityMap::build(std::move(raw.zones), raw.edges);
}

MapValidationReport validate_city_map_file(const std::string& path) {
    RawMap raw = parse_map_file(path);
    return CityMap::validate_records(raw.zones, raw.edges);
}

void save_city_map(const CityMap& map, std::ostream& out) {
    out << kZoneHeader << '\n';
    for (const auto& z : map.zones())
        out << z.zone_id << ',' << text::fmt_double(z.centroid.x) << ','
            << text::fmt_double(z.centroid.y) << '\n';
    out << kEdgeHeader << '\n';
    for (const auto& z : map.zones())
        for (int nb : z.adjacent_ids) out << z.zone_id << ',' << nb << '\n';
}

}  // namespace ridesim
