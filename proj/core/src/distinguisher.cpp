#include "csf_forge/distinguisher.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "csf_forge/csf.hpp"
#include "csf_forge/tree_canon.hpp"
#include "csf_forge/tree_gen.hpp"

namespace csf_forge {

namespace {

constexpr std::uint64_t kShardSize = 1024;

struct Entry {
  Digest128 digest;
  std::string tree_text;
};

std::string fingerprint_bytes(const SymmetricFunction& x) {
  std::string bytes = x.basis() == Basis::PowerSum ? "p|" : "m|";
  bytes += std::to_string(x.n());
  bytes += "|";
  for (const auto& [lambda, c] : x.coefficients()) {
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) bytes += ",";
      bytes += std::to_string(parts[i]);
    }
    bytes += ":";
    bytes += c.to_string();
    bytes += ";";
  }
  return bytes;
}

nlohmann::json entries_to_json(const std::vector<Entry>& entries) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : entries) out.push_back({e.digest.to_hex(), e.tree_text});
  return out;
}

std::vector<Entry> entries_from_json(const nlohmann::json& j) {
  std::vector<Entry> out;
  for (const auto& item : j) {
    const std::string hex = item.at(0).get<std::string>();
    if (hex.size() != 32) throw std::invalid_argument("bad digest length");
    Entry e;
    e.digest.hi = std::stoull(hex.substr(0, 16), nullptr, 16);
    e.digest.lo = std::stoull(hex.substr(16), nullptr, 16);
    e.tree_text = item.at(1).get<std::string>();
    out.push_back(std::move(e));
  }
  return out;
}

// Resumable per-shard results: JSON lines, each record carrying the digest
// of its own payload so corruption is caught on reload. A trailing partial
// line is an interrupted write and is ignored.
class CheckpointFile {
 public:
  explicit CheckpointFile(std::string path) : path_(std::move(path)) { load(); }

  const std::vector<Entry>* find(int n, std::uint64_t shard) const {
    const auto it = shards_.find({n, shard});
    return it == shards_.end() ? nullptr : &it->second;
  }

  void append(int n, std::uint64_t shard, const std::vector<Entry>& entries) {
    nlohmann::json payload = {{"n", n},
                              {"shard", shard},
                              {"first", shard * kShardSize},
                              {"count", entries.size()},
                              {"entries", entries_to_json(entries)}};
    const std::string payload_text = payload.dump();
    const nlohmann::json record = {{"payload", payload_text},
                                   {"crc", fnv1a128(payload_text).to_hex()}};
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open checkpoint file: " + path_);
    out << record.dump() << "\n";
    out.flush();
    shards_[{n, shard}] = entries;
  }

 private:
  void load() {
    std::ifstream in(path_);
    if (!in) return;  // no checkpoint yet
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
      if (!line.empty()) lines.push_back(line);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      nlohmann::json record;
      try {
        record = nlohmann::json::parse(lines[i]);
      } catch (const nlohmann::json::parse_error&) {
        if (i + 1 == lines.size()) return;  // interrupted final write
        throw std::runtime_error("corrupt checkpoint: unparseable record");
      }
      try {
        const std::string payload_text = record.at("payload").get<std::string>();
        if (fnv1a128(payload_text).to_hex() != record.at("crc").get<std::string>())
          throw std::runtime_error("corrupt checkpoint: integrity digest mismatch");
        const nlohmann::json payload = nlohmann::json::parse(payload_text);
        const int n = payload.at("n").get<int>();
        const auto shard = payload.at("shard").get<std::uint64_t>();
        auto entries = entries_from_json(payload.at("entries"));
        if (payload.at("count").get<std::size_t>() != entries.size() ||
            payload.at("first").get<std::uint64_t>() != shard * kShardSize)
          throw std::runtime_error("corrupt checkpoint: inconsistent shard record");
        shards_[{n, shard}] = std::move(entries);
      } catch (const nlohmann::json::exception&) {
        throw std::runtime_error("corrupt checkpoint: malformed record fields");
      }
    }
  }

  std::string path_;
  std::map<std::pair<int, std::uint64_t>, std::vector<Entry>> shards_;
};

void compute_digests(std::vector<Entry>& entries, const std::vector<std::size_t>& todo,
                     int workers) {
  const auto work = [&](std::size_t offset, std::size_t stride) {
    for (std::size_t i = offset; i < todo.size(); i += stride) {
      Entry& e = entries[todo[i]];
      e.digest = fingerprint(csf(LabeledGraph::parse(e.tree_text)));
    }
  };
  if (workers <= 1 || todo.size() < 2) {
    work(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        work(w, workers);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
}

std::vector<Entry> order_entries(int n, int workers, CheckpointFile* checkpoint) {
  std::vector<Entry> entries;
  {
    FreeTreeGenerator gen(n);
    while (auto t = gen.next()) entries.push_back(Entry{{}, t->to_string()});
  }
  const std::uint64_t shard_count = (entries.size() + kShardSize - 1) / kShardSize;

  std::vector<std::size_t> todo;
  std::vector<std::uint64_t> fresh_shards;
  for (std::uint64_t shard = 0; shard < shard_count; ++shard) {
    const std::size_t first = shard * kShardSize;
    const std::size_t last = std::min<std::size_t>(first + kShardSize, entries.size());
    const std::vector<Entry>* stored = checkpoint ? checkpoint->find(n, shard) : nullptr;
    if (stored) {
      if (stored->size() != last - first)
        throw std::runtime_error("corrupt checkpoint: shard size mismatch");
      std::copy(stored->begin(), stored->end(), entries.begin() + first);
      for (std::size_t i = first; i < last; ++i)
        if ((entries.begin() + i)->tree_text.empty())
          throw std::runtime_error("corrupt checkpoint: empty tree record");
    } else {
      for (std::size_t i = first; i < last; ++i) todo.push_back(i);
      fresh_shards.push_back(shard);
    }
  }
  compute_digests(entries, todo, workers);
  if (checkpoint) {
    for (const std::uint64_t shard : fresh_shards) {
      const std::size_t first = shard * kShardSize;
      const std::size_t last = std::min<std::size_t>(first + kShardSize, entries.size());
      checkpoint->append(n, shard,
                         std::vector<Entry>(entries.begin() + first, entries.begin() + last));
    }
  }
  return entries;
}

VerificationReport assemble_report(int n, int workers, std::vector<Entry> entries,
                                   std::int64_t elapsed_ms) {
  VerificationReport report;
  report.n = n;
  report.workers = workers;
  report.tree_count = entries.size();
  report.elapsed_ms = elapsed_ms;

  std::vector<std::pair<Digest128, std::string>> items;
  items.reserve(entries.size());
  for (auto& e : entries) items.emplace_back(e.digest, std::move(e.tree_text));
  report.collision_groups = detail::collision_groups(
      items, [](const std::string& text) { return csf(LabeledGraph::parse(text)); },
      [](const std::string& text) { return canonical_code(LabeledTree::parse(text)).code; });
  return report;
}

}  // namespace

std::string Digest128::to_hex() const {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return buf;
}

Digest128 fnv1a128(const std::string& bytes) {
  // FNV-1a with the 128-bit prime 2^88 + 2^8 + 0x3b.
  unsigned __int128 hash = (static_cast<unsigned __int128>(0x6c62272e07bb0142ull) << 64) |
                           0x62b821756295c58dull;
  const unsigned __int128 prime = (static_cast<unsigned __int128>(1) << 88) | 0x13bull;
  for (const unsigned char byte : bytes) {
    hash ^= byte;
    hash *= prime;
  }
  return Digest128{static_cast<std::uint64_t>(hash >> 64), static_cast<std::uint64_t>(hash)};
}

Digest128 fingerprint(const SymmetricFunction& x) { return fnv1a128(fingerprint_bytes(x)); }

std::string VerificationReport::to_json_string() const {
  const nlohmann::json j = {{"n", n},
                            {"treeCount", tree_count},
                            {"collisionGroups", collision_groups},
                            {"elapsed_ms", elapsed_ms},
                            {"workers", workers}};
  return j.dump();
}

VerificationReport verify_order(int n, int workers, int max_order) {
  if (n < 1) throw std::invalid_argument("order must be at least 1");
  if (n > max_order)
    throw std::length_error("order " + std::to_string(n) + " exceeds the verification guard (" +
                            std::to_string(max_order) + ")");
  if (workers < 1) workers = 1;
  const auto start = std::chrono::steady_clock::now();
  auto entries = order_entries(n, workers, nullptr);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return assemble_report(n, workers, std::move(entries), elapsed);
}

std::vector<VerificationReport> verify_range(int low, int high, int workers,
                                             const std::string& checkpoint_path, int max_order) {
  if (low < 1 || low > high)
    throw std::invalid_argument("invalid verification range " + std::to_string(low) + ".." +
                                std::to_string(high));
  if (high > max_order)
    throw std::length_error("order " + std::to_string(high) + " exceeds the verification guard (" +
                            std::to_string(max_order) + ")");
  if (workers < 1) workers = 1;

  std::unique_ptr<CheckpointFile> checkpoint;
  if (!checkpoint_path.empty()) checkpoint = std::make_unique<CheckpointFile>(checkpoint_path);

  std::vector<VerificationReport> reports;
  for (int n = low; n <= high; ++n) {
    const auto start = std::chrono::steady_clock::now();
    auto entries = order_entries(n, workers, checkpoint.get());
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    reports.push_back(assemble_report(n, workers, std::move(entries), elapsed));
  }
  return reports;
}

namespace detail {

std::vector<std::vector<std::string>> collision_groups(
    const std::vector<std::pair<Digest128, std::string>>& items,
    const std::function<SymmetricFunction(const std::string&)>& exact_csf,
    const std::function<std::string(const std::string&)>& display_code) {
  std::map<Digest128, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < items.size(); ++i) buckets[items[i].first].push_back(i);

  std::vector<std::vector<std::string>> groups;
  for (const auto& [digest, indices] : buckets) {
    if (indices.size() < 2) continue;
    // Digest agreement is not enough: recompute and compare exactly.
    std::vector<std::pair<SymmetricFunction, std::vector<std::size_t>>> exact;
    for (const std::size_t idx : indices) {
      SymmetricFunction x = exact_csf(items[idx].second);
      bool matched = false;
      for (auto& [value, members] : exact) {
        if (value == x) {
          members.push_back(idx);
          matched = true;
          break;
        }
      }
      if (!matched) exact.emplace_back(std::move(x), std::vector<std::size_t>{idx});
    }
    for (const auto& [value, members] : exact) {
      if (members.size() < 2) continue;
      std::vector<std::string> group;
      for (const std::size_t idx : members) group.push_back(display_code(items[idx].second));
      std::sort(group.begin(), group.end());
      groups.push_back(std::move(group));
    }
  }
  std::sort(groups.begin(), groups.end());
  return groups;
}

}  // namespace detail

}  // namespace csf_forge
