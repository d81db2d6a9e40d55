#include "polyprod/cache.hpp"

#include <cstring>
#include <filesystem>
#include <fstream>

#include "polyprod/errors.hpp"
#include "polyprod/report.hpp"

namespace polyprod {

namespace fs = std::filesystem;

namespace {

constexpr u64 kBlockSize = 256;
constexpr char kSieveMagic[8] = {'P', 'P', 'S', 'V', '1', 0, 0, 0};
constexpr char kBlockMagic[8] = {'P', 'P', 'F', 'B', '1', 0, 0, 0};

void put_u64(std::string& buf, u64 v) {
  for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_i64(std::string& buf, i64 v) { put_u64(buf, static_cast<u64>(v)); }

struct Reader {
  const std::string& buf;
  std::size_t pos = 0;
  bool ok = true;

  u64 u() {
    if (pos + 8 > buf.size()) {
      ok = false;
      return 0;
    }
    u64 v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<u64>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
    pos += 8;
    return v;
  }
  i64 s() { return static_cast<i64>(u()); }
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return data;
}

bool write_file(const std::string& path, const std::string& data) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) return false;
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  return !ec;
}

// payload framing: magic(8) keyhash(8) payload checksum(8 at end)
std::optional<std::string> open_payload(const std::string& path,
                                        const char* magic, u64 key_hash) {
  auto data = read_file(path);
  if (!data || data->size() < 24) return std::nullopt;
  if (std::memcmp(data->data(), magic, 8) != 0) return std::nullopt;
  Reader r{*data, 8};
  if (r.u() != key_hash) return std::nullopt;
  std::string payload = data->substr(16, data->size() - 24);
  Reader tail{*data, data->size() - 8};
  if (tail.u() != fnv1a64(payload)) return std::nullopt;  // corrupted: rebuild
  return payload;
}

void seal_and_write(const std::string& path, const char* magic, u64 key_hash,
                    const std::string& payload) {
  std::string out;
  out.append(magic, 8);
  put_u64(out, key_hash);
  out += payload;
  put_u64(out, fnv1a64(payload));
  write_file(path, out);
}

}  // namespace

Cache::Cache(std::string dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) dir_.clear();  // unusable directory disables the cache
}

std::string Cache::path_for(const std::string& key) const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(key)));
  return (fs::path(dir_) / (std::string(buf) + ".bin")).string();
}

std::optional<PrimeSieve> Cache::load_sieve(u64 limit) const {
  if (!enabled()) return std::nullopt;
  std::string key = "sieve:limit=" + std::to_string(limit);
  auto payload = open_payload(path_for(key), kSieveMagic, fnv1a64(key));
  if (!payload) return std::nullopt;
  Reader r{*payload, 0};
  u64 stored_limit = r.u();
  u64 words = r.u();
  if (!r.ok || stored_limit != limit || words != limit / 64 + 1) return std::nullopt;
  std::vector<u64> bits(words);
  for (u64 i = 0; i < words; ++i) bits[i] = r.u();
  if (!r.ok) return std::nullopt;
  return PrimeSieve::from_bits(limit, std::move(bits));
}

void Cache::store_sieve(const PrimeSieve& sieve) const {
  if (!enabled()) return;
  std::string key = "sieve:limit=" + std::to_string(sieve.limit());
  std::string payload;
  put_u64(payload, sieve.limit());
  put_u64(payload, sieve.raw_bits().size());
  for (u64 w : sieve.raw_bits()) put_u64(payload, w);
  seal_and_write(path_for(key), kSieveMagic, fnv1a64(key), payload);
}

std::optional<std::vector<ValueFactorization>> Cache::load_block(
    const std::string& poly_key, u64 lo, u64 hi) const {
  if (!enabled()) return std::nullopt;
  std::string key = "fact:poly=" + poly_key + ":lo=" + std::to_string(lo) +
                    ":hi=" + std::to_string(hi);
  auto payload = open_payload(path_for(key), kBlockMagic, fnv1a64(key));
  if (!payload) return std::nullopt;
  Reader r{*payload, 0};
  u64 n_lo = r.u(), n_hi = r.u();
  if (!r.ok || n_lo != lo || n_hi != hi) return std::nullopt;
  std::vector<ValueFactorization> block;
  block.reserve(hi - lo + 1);
  for (u64 n = lo; n <= hi; ++n) {
    ValueFactorization vf;
    u64 stored_n = r.u();
    i64 sign = r.s();
    u64 count = r.u();
    if (!r.ok || stored_n != n) return std::nullopt;
    vf.n = n;
    vf.sign = static_cast<int>(sign);
    vf.prime_powers.reserve(count);
    for (u64 i = 0; i < count; ++i) {
      u64 p = r.u();
      i64 e = r.s();
      if (!r.ok) return std::nullopt;
      vf.prime_powers.emplace_back(p, e);
    }
    block.push_back(std::move(vf));
  }
  return block;
}

void Cache::store_block(const std::string& poly_key, u64 lo, u64 hi,
                        const std::vector<ValueFactorization>& block) const {
  if (!enabled()) return;
  std::string key = "fact:poly=" + poly_key + ":lo=" + std::to_string(lo) +
                    ":hi=" + std::to_string(hi);
  std::string payload;
  put_u64(payload, lo);
  put_u64(payload, hi);
  for (const auto& vf : block) {
    put_u64(payload, vf.n.convert_to<u64>());
    put_i64(payload, vf.sign);
    put_u64(payload, vf.prime_powers.size());
    for (auto [p, e] : vf.prime_powers) {
      put_u64(payload, p);
      put_i64(payload, e);
    }
  }
  seal_and_write(path_for(key), kBlockMagic, fnv1a64(key), payload);
}

PrimeSieve make_sieve(u64 limit, const Cache& cache) {
  if (auto cached = cache.load_sieve(limit)) return std::move(*cached);
  PrimeSieve sieve(limit);
  cache.store_sieve(sieve);
  return sieve;
}

void extend_with_cache(FactorLedger& ledger, u64 to_x, const Cache& cache,
                       unsigned threads) {
  if (!cache.enabled()) {
    ledger.extend(to_x, threads);
    return;
  }
  std::string poly_key = ledger.polynomial().to_string();
  while (ledger.cursor() < to_x) {
    u64 next = ledger.cursor() + 1;
    u64 block_lo = (next - 1) / kBlockSize * kBlockSize + 1;
    u64 block_hi = block_lo + kBlockSize - 1;
    if (block_lo < next || block_hi > to_x) {
      // unaligned head or tail: compute directly, no caching
      u64 stop = std::min(to_x, block_hi);
      ledger.extend(stop, threads);
      continue;
    }
    auto block = cache.load_block(poly_key, block_lo, block_hi);
    if (!block) {
      std::vector<ValueFactorization> fresh;
      fresh.reserve(kBlockSize);
      for (u64 n = block_lo; n <= block_hi; ++n)
        fresh.push_back(factorize_value(ledger.polynomial(), n));
      cache.store_block(poly_key, block_lo, block_hi, fresh);
      block = std::move(fresh);
    }
    ledger.ingest(*block);
  }
}

}  // namespace polyprod
