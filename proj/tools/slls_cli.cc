// Command-line front end: operate a log file, produce and check
// certificates, and print the size analyses.
//
// Exit codes: 0 success or accept, 1 verification reject, 2 usage or data
// error.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slls/analysis.h"
#include "slls/authenticator.h"
#include "slls/codec.h"
#include "slls/paths.h"
#include "slls/pools.h"

namespace {

using slls::Position;

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kUsage = 2;

// Thrown for anything that should end the process with exit code 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

bool FileExists(const std::string& path) { return access(path.c_str(), F_OK) == 0; }

// Writes through a temporary file so readers never see a partial log.
void WriteFile(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw DataError("cannot replace " + path);
  }
}

// Exclusive advisory lock held for the lifetime of a mutating command.
class FileLock {
 public:
  explicit FileLock(const std::string& log_path) {
    const std::string path = log_path + ".lock";
    fd_ = open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0 || flock(fd_, LOCK_EX) != 0) {
      throw DataError("cannot lock " + path);
    }
  }
  ~FileLock() {
    if (fd_ >= 0) close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

slls::Log LoadLog(const std::string& path) {
  const auto decoded = slls::codec::DecodeLog(ReadFile(path));
  if (!decoded.ok()) {
    throw DataError(path + ": malformed log (" +
                    slls::codec::MalformedName(decoded.error) + ")");
  }
  return *decoded.value;
}

slls::Scheme SchemeFor(std::uint64_t base) {
  try {
    return slls::Scheme::SkipList(base);
  } catch (const slls::Error& e) {
    throw DataError(e.what());
  }
}

slls::Digest ParseDigest(const std::string& hex, const char* flag) {
  const auto d = slls::Digest::FromHex(hex);
  if (!d) throw DataError(std::string(flag) + " must be 64 lowercase hex digits");
  return *d;
}

std::string ReadItem(const std::string& file) {
  if (!file.empty() && file != "-") {
    const auto bytes = ReadFile(file);
    return std::string(bytes.begin(), bytes.end());
  }
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

struct Options {
  std::string log = "slls.log";
  std::uint64_t base = 3;
  bool init = false;
  std::string item_file;
  std::optional<Position> at;
  Position from = 0;
  Position to = 0;
  std::string out;
  std::string cert;
  std::string digest_s;
  std::string digest_t;
  std::optional<Position> len_s;
  std::optional<Position> len_t;
  Position n = 0;
  std::optional<Position> round;
  bool chained = false;
  std::string labels;
  int max_exp = 33;
  bool text = false;
};

int CmdInit(const Options& o) {
  FileLock lock(o.log);
  if (FileExists(o.log)) throw DataError(o.log + " already exists");
  WriteFile(o.log, slls::codec::EncodeLog(slls::Log(SchemeFor(o.base))));
  std::cout << "0\n";
  return kOk;
}

int CmdAppend(const Options& o, const CLI::App& cmd) {
  FileLock lock(o.log);
  const bool base_given = cmd.count("--base") > 0;
  std::optional<slls::Log> log;
  if (FileExists(o.log)) {
    log = LoadLog(o.log);
    if (base_given && !(log->scheme() == SchemeFor(o.base))) {
      throw DataError("--base " + std::to_string(o.base) + " does not match " +
                      log->scheme().ToString() + " log " + o.log);
    }
  } else if (o.init) {
    log.emplace(SchemeFor(o.base));
  } else {
    throw DataError(o.log + " does not exist (use init, or append --init)");
  }
  const slls::Digest d = log->Append(ReadItem(o.item_file));
  WriteFile(o.log, slls::codec::EncodeLog(*log));
  std::cout << log->length() << ' ' << d.ToHex() << '\n';
  return kOk;
}

int CmdDigest(const Options& o) {
  const slls::Log log = LoadLog(o.log);
  const Position n = o.at.value_or(log.length());
  if (n == 0 || n > log.length()) {
    throw DataError("--at must be in [1, " + std::to_string(log.length()) + "]");
  }
  std::cout << log.DigestAt(n).ToHex() << '\n';
  return kOk;
}

int CmdProve(const Options& o) {
  const slls::Log log = LoadLog(o.log);
  if (o.from == 0 || o.from > o.to || o.to > log.length()) {
    throw DataError("need 1 <= --from <= --to <= " + std::to_string(log.length()));
  }
  const slls::PrefixCert cert = slls::BuildPrefixCert(log, o.from, o.to);
  WriteFile(o.out, slls::codec::EncodePrefixCert(cert));
  std::cout << cert.labels.size() << '\n';
  return kOk;
}

int CmdVerify(const Options& o) {
  const auto decoded = slls::codec::DecodePrefixCert(ReadFile(o.cert));
  if (!decoded.ok()) {
    throw DataError(o.cert + ": malformed certificate (" +
                    slls::codec::MalformedName(decoded.error) + ")");
  }
  const slls::PrefixCert& cert = *decoded.value;
  const slls::Digest ds = ParseDigest(o.digest_s, "--digest-s");
  const slls::Digest dt = ParseDigest(o.digest_t, "--digest-t");
  const slls::VerifyResult r =
      slls::VerifyPrefixCert(cert, o.len_s.value_or(cert.len_s), ds,
                             o.len_t.value_or(cert.len_t), dt);
  if (r == slls::VerifyResult::kAccept) {
    std::cout << "OK\n";
    return kOk;
  }
  std::cout << "REJECT " << slls::VerifyResultName(r) << '\n';
  return kReject;
}

int CmdPool(const Options& o) {
  const slls::Scheme scheme = SchemeFor(o.base);
  if (o.chained && !o.round) throw DataError("--chained requires --round");
  const slls::CertPool pool = slls::PoolFor(scheme, o.n, o.round);
  std::optional<slls::Log> log;
  if (!o.labels.empty()) {
    log = LoadLog(o.labels);
    if (!(log->scheme() == scheme)) throw DataError("--labels log uses another scheme");
  }
  std::cout << "pool\n";
  for (const slls::Vertex& v : pool.Vertices()) std::cout << v.ToString() << '\n';
  std::cout << "certificate\n";
  const std::vector<slls::Vertex> entries = slls::ExclusiveOutNeighborhood(pool);
  for (const slls::Vertex& v : entries) {
    std::cout << (v.is_sink() ? "sink " : "") << v.ToString();
    if (log) std::cout << ' ' << log->Label(v).ToHex();
    std::cout << '\n';
  }
  if (o.chained) {
    std::cout << "chain";
    if (log && log->chain_digest()) std::cout << ' ' << log->chain_digest()->ToHex();
    std::cout << '\n';
  }
  std::cout << "count " << entries.size() + (o.chained ? 1 : 0) << '\n';
  return kOk;
}

int CmdTable(const Options& o) {
  if (o.max_exp < 0 || o.max_exp > 33) throw DataError("--max-exp must be in [0, 33]");
  const auto rows = slls::analysis::SizeTable(std::uint64_t{1} << o.max_exp);
  if (o.text) {
    slls::analysis::WriteSizeTableText(std::cout, rows);
  } else {
    slls::analysis::WriteSizeTableCsv(std::cout, rows);
  }
  return kOk;
}

int CmdStats(const Options& o) {
  const auto s = slls::analysis::ComputeSchemeStats(SchemeFor(o.base), o.n);
  std::cout << "vertices=" << s.vertex_count << " edges=" << s.edge_count
            << " max_out_degree=" << s.max_out_degree << '\n';
  return kOk;
}

int CmdPath(const Options& o) {
  const slls::Scheme scheme = SchemeFor(o.base);
  const slls::Path path = slls::CanonicalPath(scheme, slls::Commit(scheme, o.from),
                                              slls::Commit(scheme, o.to));
  for (const slls::Vertex& v : path.vertices) std::cout << v.ToString() << '\n';
  std::cout << "edges " << path.edge_count() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skip list linking schemes: logs, prefix certificates, analyses"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--log", o.log, "log file (SLLS_LOG overrides)");

  auto* init = app.add_subcommand("init", "create an empty log");
  init->add_option("--base", o.base, "skip list base")->check(CLI::Range(2, 244));

  auto* append = app.add_subcommand("append", "append one item (file or stdin)");
  append->add_option("--base", o.base, "expected skip list base");
  append->add_flag("--init", o.init, "create the log if it does not exist");
  append->add_option("item", o.item_file, "item file, '-' or omitted for stdin");

  auto* digest = app.add_subcommand("digest", "print the log digest");
  digest->add_option("--at", o.at, "prefix length");

  auto* prove = app.add_subcommand("prove", "write a prefix certificate");
  prove->add_option("--from", o.from)->required();
  prove->add_option("--to", o.to)->required();
  prove->add_option("--out", o.out)->required();

  auto* verify = app.add_subcommand("verify", "check a prefix certificate");
  verify->add_option("cert", o.cert)->required();
  verify->add_option("--digest-s", o.digest_s)->required();
  verify->add_option("--digest-t", o.digest_t)->required();
  verify->add_option("--len-s", o.len_s, "expected length of digest-s");
  verify->add_option("--len-t", o.len_t, "expected length of digest-t");

  auto* pool = app.add_subcommand("pool", "print a certificate pool");
  pool->add_option("--n", o.n)->required();
  pool->add_option("--base", o.base);
  pool->add_option("--round", o.round, "round length b^T");
  pool->add_flag("--chained", o.chained);
  pool->add_option("--labels", o.labels, "log file to read labels from");

  auto* table = app.add_subcommand("table", "positional certificate size table");
  table->add_option("--max-exp", o.max_exp, "table up to 2^E (E <= 33)");
  table->add_flag("--text", o.text, "aligned text instead of CSV");

  auto* stats = app.add_subcommand("stats", "vertex and edge counts");
  stats->add_option("--n", o.n)->required();
  stats->add_option("--base", o.base);

  auto* path = app.add_subcommand("path", "print the canonical path");
  path->add_option("--from", o.from)->required();
  path->add_option("--to", o.to)->required();
  path->add_option("--base", o.base);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (const char* env = std::getenv("SLLS_LOG"); env != nullptr && *env != '\0') {
    o.log = env;
  }

  try {
    if (*init) return CmdInit(o);
    if (*append) return CmdAppend(o, *append);
    if (*digest) return CmdDigest(o);
    if (*prove) return CmdProve(o);
    if (*verify) return CmdVerify(o);
    if (*pool) return CmdPool(o);
    if (*table) return CmdTable(o);
    if (*stats) return CmdStats(o);
    if (*path) return CmdPath(o);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const slls::Error& e) {
    std::cerr << "error: " << slls::ErrorCodeName(e.code()) << ": " << e.what()
              << '\n';
  }
  return kUsage;
}
