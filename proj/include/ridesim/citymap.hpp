#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace ridesim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Zone {
    int zone_id = 0;
    Vec2 centroid;
    std::vector<int> adjacent_ids;  // ascending, no self-loop
};

struct MapValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Zone-granular city model. Adjacency is symmetric and the graph is
// connected; both are enforced when a map is built from records.
// Shortest-path hop counts and deterministic next-hop steps (BFS with
// ascending-id neighbor order) are precomputed for every zone pair.
class CityMap {
public:
    CityMap() = default;

    // Builds from raw zone/edge records. Throws std::runtime_error when the
    // records do not form a valid map (use validate_records to get a report
    // instead of an exception).
    static CityMap build(std::vector<Zone> zones,
                         const std::vector<std::pair<int, int>>& edges);

    static MapValidationReport validate_records(
        const std::vector<Zone>& zones,
        const std::vector<std::pair<int, int>>& edges);

    std::size_t size() const { return zones_.size(); }
    bool has_zone(int zone_id) const { return index_.count(zone_id) != 0; }
    const std::vector<Zone>& zones() const { return zones_; }

    const Zone& zone(int zone_id) const;
    int index_of(int zone_id) const;
    int zone_id_at(int index) const { return zones_.at(index).zone_id; }

    // Neighbors in ascending zone_id order, excluding the zone itself.
    const std::vector<int>& neighbors(int zone_id) const;

    // O(z): the zone itself plus its neighbors, ascending zone_id order.
    std::vector<int> neighborhood(int zone_id) const;

    // Shortest-path hop count between zones.
    int hop_distance(int from_id, int to_id) const;

    // First hop of the lexicographically-smallest shortest path from -> to.
    // Returns to_id when from == to.
    int next_hop(int from_id, int to_id) const;

    Vec2 centroid(int zone_id) const { return zone(zone_id).centroid; }

private:
    std::vector<Zone> zones_;                // sorted by zone_id
    std::unordered_map<int, int> index_;     // zone_id -> index
    std::vector<int> dist_;                  // size n*n
    std::vector<int> hop_;                   // size n*n, stores zone index
    void compute_paths();
};

// Direction of a trip as centroid(d) - centroid(o). Zero vector when o == d.
// Unknown zone ids are a hard error.
Vec2 trip_direction(int origin_id, int dest_id, const CityMap& map);

// CityMap file format: two comma-separated sections, each with a required
// header row:
//   zone_id,centroid_x,centroid_y
//   <id>,<x>,<y>
//   ...
//   zone_id_a,zone_id_b
//   <a>,<b>                (directed records; symmetry is validated)
//   ...
CityMap load_city_map(const std::string& path);
MapValidationReport validate_city_map_file(const std::string& path);
void save_city_map(const CityMap& map, std::ostream& out);

}  // namespace ridesim
