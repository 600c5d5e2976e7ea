#include "symsq/cache.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "symsq/characters.hpp"
#include "symsq/error.hpp"
#include "symsq/modform.hpp"

namespace symsq::cache {

namespace {

constexpr const char* kCharHeader = "q,ell,index,generator,conductor";

struct CharRow {
  i64 q = 0, ell = 0, index = 0, generator = 0, conductor = 0;
};

i64 count_tau_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  i64 rows = 0;
  for (int skip = 0; skip < 2 && std::getline(in, line); ++skip) {
  }
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  return rows;
}

bool read_char_rows(const std::filesystem::path& path, std::vector<CharRow>& rows) {
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line) || line != kCharHeader) return false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream s(line);
    CharRow r;
    char c1, c2, c3, c4;
    if (!(s >> r.q >> c1 >> r.ell >> c2 >> r.index >> c3 >> r.generator >> c4 >> r.conductor)) return false;
    if (c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',') return false;
    std::string rest;
    if (s >> rest) return false;
    rows.push_back(r);
  }
  return !rows.empty();
}

std::filesystem::path digest_path(const std::filesystem::path& file) { return file.string() + ".digest"; }

std::string content_digest(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  const std::string text = s.str();
  return std::to_string(text.size()) + " " + std::to_string(std::hash<std::string>{}(text));
}

void write_digest(const std::filesystem::path& file) {
  std::ofstream out(digest_path(file), std::ios::trunc);
  if (!out) throw IoError("cannot write " + digest_path(file).string());
  out << content_digest(file) << '\n';
}

// Empty when no digest was recorded, else whether it matches.
std::optional<bool> digest_matches(const std::filesystem::path& file) {
  std::ifstream in(digest_path(file));
  if (!in) return std::nullopt;
  std::string line;
  std::getline(in, line);
  return line == content_digest(file);
}

Status quarantine(const std::filesystem::path& file, const std::filesystem::path& dir, Status st) {
  const auto target = dir / "quarantine" / file.filename();
  std::filesystem::create_directories(target.parent_path());
  std::filesystem::rename(file, target);
  std::error_code ec;
  std::filesystem::remove(digest_path(file), ec);
  st.ok = false;
  st.quarantined = target;
  return st;
}

}  // namespace

std::filesystem::path file_for(Kind kind, const std::filesystem::path& dir) {
  return dir / (kind == Kind::Tau ? "tau.csv" : "characters.csv");
}

const std::vector<std::pair<i64, int>>& default_character_moduli() {
  static const std::vector<std::pair<i64, int>> m = {{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {7, 3}};
  return m;
}

Status build(Kind kind, const std::filesystem::path& dir, i64 tau_limit) {
  Status st;
  const auto file = file_for(kind, dir);
  if (kind == Kind::Tau) {
    if (tau_limit < 1) throw DomainError("cache build: tau limit must be positive");
    modform::write_tau_csv(file, modform::tau_table(tau_limit));
    st.entries = tau_limit;
  } else {
    std::filesystem::create_directories(dir);
    const auto tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) throw IoError("cache build: cannot open " + tmp);
      out << kCharHeader << '\n';
      for (auto [q, ell] : default_character_moduli()) {
        for (const auto& chi : make_characters(q, ell)) {
          out << q << ',' << ell << ',' << chi.index() << ',' << chi.generator() << ',' << chi.conductor() << '\n';
          ++st.entries;
        }
      }
    }
    std::filesystem::rename(tmp, file);
  }
  write_digest(file);
  st.message = "built " + file.string();
  return st;
}

Status verify(Kind kind, const std::filesystem::path& dir, int samples, std::uint64_t seed) {
  Status st;
  const auto file = file_for(kind, dir);
  if (!std::filesystem::exists(file)) {
    st.ok = false;
    st.message = "missing " + file.string();
    return st;
  }
  if (digest_matches(file) == false) {
    st.message = "digest mismatch in " + file.string();
    return quarantine(file, dir, st);
  }
  std::mt19937_64 rng(seed);
  if (kind == Kind::Tau) {
    st.entries = count_tau_rows(file);
    const auto tau = st.entries > 0 ? modform::read_tau_csv(file, st.entries) : std::nullopt;
    if (!tau) {
      st.message = "malformed " + file.string();
      return quarantine(file, dir, st);
    }
    std::uniform_int_distribution<i64> pick(1, st.entries);
    std::vector<i64> ns(static_cast<std::size_t>(samples));
    for (auto& n : ns) n = pick(rng);
    const auto fresh = modform::tau_table(*std::max_element(ns.begin(), ns.end()));
    for (i64 n : ns) {
      ++st.checked;
      if ((*tau)[n] != fresh[n]) {
        st.message = "tau(" + std::to_string(n) + ") mismatch in " + file.string();
        return quarantine(file, dir, st);
      }
    }
  } else {
    std::vector<CharRow> rows;
    if (!read_char_rows(file, rows)) {
      st.message = "malformed " + file.string();
      return quarantine(file, dir, st);
    }
    st.entries = static_cast<i64>(rows.size());
    std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
    for (int i = 0; i < samples; ++i) {
      const CharRow& r = rows[pick(rng)];
      ++st.checked;
      bool good = false;
      try {
        const DirichletCharacter chi(r.q, static_cast<int>(r.ell), r.index);
        good = chi.generator() == r.generator && chi.conductor() == r.conductor;
      } catch (const Error&) {
      }
      if (!good) {
        st.message = "character row (" + std::to_string(r.q) + "," + std::to_string(r.ell) + "," + std::to_string(r.index) +
                     ") mismatch in " + file.string();
        return quarantine(file, dir, st);
      }
    }
  }
  st.message = "verified " + file.string();
  return st;
}

Status clear(Kind kind, const std::filesystem::path& dir) {
  Status st;
  const auto file = file_for(kind, dir);
  std::error_code ec;
  std::filesystem::remove(digest_path(file), ec);
  st.entries = std::filesystem::remove(file) ? 1 : 0;
  st.message = (st.entries ? "removed " : "nothing at ") + file.string();
  return st;
}

}  // namespace symsq::cache
