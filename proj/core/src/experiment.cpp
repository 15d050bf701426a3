#include "morsetw/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "morsetw/error.hpp"
#include "morsetw/io.hpp"
#include "morsetw/morse.hpp"

namespace morsetw {

namespace {

struct Row {
  std::string name;
  std::optional<long> ntri, ntet, tw_spine, tw_spine_exact, tw_dual, tw_dual_exact, er, cM;
  std::optional<double> ms_spine, ms_dual, ms_acfm;
  std::string error;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Decomposition policy of the pipelines, with the exactness flag exposed.
std::pair<TreeDecomposition, bool> decompose(const Graph& g) {
  if (g.n <= 20) return {exact_treewidth(g).second, true};
  return {heuristic_decomposition(g), false};
}

Row process(const std::filesystem::path& path) {
  Row row;
  row.name = path.filename().string();
  try {
    SimplicialComplex k = read_complex_file(path.string());
    row.ntri = k.triangle_count();
    row.ntet = k.tetrahedron_count();

    Graph sp = spine(k);
    auto t0 = std::chrono::steady_clock::now();
    auto [td_spine, spine_exact] = decompose(sp);
    NiceTreeDecomposition nice = make_nice(td_spine);
    row.ms_spine = ms_since(t0);
    row.tw_spine = td_spine.width();
    row.tw_spine_exact = spine_exact ? 1 : 0;

    if (k.dim == 3) {
      Graph dual = dual_graph(k);
      t0 = std::chrono::steady_clock::now();
      auto [td_dual, dual_exact] = decompose(dual);
      row.ms_dual = ms_since(t0);
      row.tw_dual = td_dual.width();
      row.tw_dual_exact = dual_exact ? 1 : 0;

      t0 = std::chrono::steady_clock::now();
      AcfmResult acfm = max_acfm(sp, nice);
      MorseMatching matching = complete_matching_3manifold(k, acfm.matching);
      row.ms_acfm = ms_since(t0);
      row.cM = matching.total_critical();
    } else {
      t0 = std::chrono::steady_clock::now();
      AcfmResult acfm = max_acfm(sp, nice);
      row.ms_acfm = ms_since(t0);
      std::vector<int> critical;
      std::vector<char> matched(k.triangle_count(), 0);
      for (const auto& [a, b] : acfm.matching) matched[std::min(a, b)] = 1;
      for (int t = 0; t < k.triangle_count(); ++t)
        if (!matched[t]) critical.push_back(t);
      if (!erase_after_deleting(k, critical).erasable)
        fail(errc::WitnessVerificationFailed, "critical triangles do not make " + row.name + " erasable");
      row.er = k.triangle_count() - acfm.size;
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

std::string fmt(const std::optional<long>& v) { return v ? std::to_string(*v) : ""; }

std::string fmt(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << *v;
  return os.str();
}

} // namespace

std::string run_experiment(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    fail(errc::PreconditionViolated, "'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".tri")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  int threads = 1;
  if (const char* env = std::getenv("MORSETW_THREADS")) {
    threads = std::max(1, std::atoi(env));
  }
  threads = std::min<int>(threads, std::max<size_t>(files.size(), 1));

  std::vector<Row> rows(files.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < files.size(); i = next.fetch_add(1))
      rows[i] = process(files[i]);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::ostringstream out;
  out << "name,ntri,ntet,tw_spine,tw_spine_exact,tw_dual,tw_dual_exact,er,cM,"
         "ms_spine,ms_dual,ms_acfm,error\n";
  for (const auto& r : rows) {
    out << csv_quote(r.name) << ',' << fmt(r.ntri) << ',' << fmt(r.ntet) << ','
        << fmt(r.tw_spine) << ',' << fmt(r.tw_spine_exact) << ',' << fmt(r.tw_dual) << ','
        << fmt(r.tw_dual_exact) << ',' << fmt(r.er) << ',' << fmt(r.cM) << ','
        << fmt(r.ms_spine) << ',' << fmt(r.ms_dual) << ',' << fmt(r.ms_acfm) << ','
        << csv_quote(r.error) << '\n';
  }

  // min / max / mean over the rows that have each value.
  auto longs = [&](auto member) {
    std::vector<long> vals;
    for (const auto& r : rows)
      if (r.*member) vals.push_back(*(r.*member));
    return vals;
  };
  auto doubles = [&](auto member) {
    std::vector<double> vals;
    for (const auto& r : rows)
      if (r.*member) vals.push_back(*(r.*member));
    return vals;
  };
  auto emit_summary = [&](const char* which) {
    out << which;
    auto put_long = [&](std::vector<long> vals) {
      out << ',';
      if (vals.empty()) return;
      if (std::string(which) == "min")
        out << *std::min_element(vals.begin(), vals.end());
      else if (std::string(which) == "max")
        out << *std::max_element(vals.begin(), vals.end());
      else {
        double sum = 0;
        for (long v : vals) sum += static_cast<double>(v);
        out << fmt(std::optional<double>(sum / static_cast<double>(vals.size())));
      }
    };
    auto put_double = [&](std::vector<double> vals) {
      out << ',';
      if (vals.empty()) return;
      double v;
      if (std::string(which) == "min")
        v = *std::min_element(vals.begin(), vals.end());
      else if (std::string(which) == "max")
        v = *std::max_element(vals.begin(), vals.end());
      else {
        double sum = 0;
        for (double x : vals) sum += x;
        v = sum / static_cast<double>(vals.size());
      }
      out << fmt(std::optional<double>(v));
    };
    put_long(longs(&Row::ntri));
    put_long(longs(&Row::ntet));
    put_long(longs(&Row::tw_spine));
    put_long(longs(&Row::tw_spine_exact));
    put_long(longs(&Row::tw_dual));
    put_long(longs(&Row::tw_dual_exact));
    put_long(longs(&Row::er));
    put_long(longs(&Row::cM));
    put_double(doubles(&Row::ms_spine));
    put_double(doubles(&Row::ms_dual));
    put_double(doubles(&Row::ms_acfm));
    out << ",\n";
  };
  if (!rows.empty()) {
    emit_summary("min");
    emit_summary("max");
    emit_summary("mean");
  }
  return out.str();
}

} // namespace morsetw
