#include <cstdlib>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace zipfben {
namespace {

using testing::read_bytes;
using testing::TempDir;
using testing::write_bytes;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const TempDir& dir, const std::string& args) {
  const auto out = dir / "stdout.txt";
  const auto err = dir / "stderr.txt";
  const auto cmd = std::string(ZIPFBEN_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_bytes(out), read_bytes(err)};
}

std::string quoted(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

TEST(Cli, SynthThenAnalyze) {
  TempDir dir;
  const auto corpus = dir / "synthetic.txt";
  ASSERT_EQ(run(dir, "synth --n 1000 --total 100000 --alpha 1 --seed 3 --out " + quoted(corpus)).code, 0);
  const auto text = read_bytes(corpus);
  const auto lines = std::count(text.begin(), text.end(), '\n');

  const auto out = dir / "out";
  const auto r = run(dir, "analyze --input " + quoted(corpus) + " --mode natural --format tsv --out " + quoted(out));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_bytes(out / "run.summary.tsv"));
  for (const auto* name : {"synthetic.summary.tsv", "synthetic.rankfreq.tsv", "synthetic.loglog.tsv",
                           "synthetic.digits.tsv"}) {
    EXPECT_TRUE(std::filesystem::exists(out / name)) << name;
  }
  EXPECT_NE(r.out.find("\nsynthetic\t" + std::to_string(lines) + "\t1000\t"), std::string::npos) << r.out;
}

TEST(Cli, ManifestRunIsDeterministic) {
  TempDir dir;
  ASSERT_EQ(run(dir, "synth --n 400 --total 40000 --out " + quoted(dir / "a.txt")).code, 0);
  ASSERT_EQ(run(dir, "synth --n 600 --total 60000 --alpha 1.1 --out " + quoted(dir / "b.txt")).code, 0);
  write_bytes(dir / "m.tsv", "b\tnatural\tb.txt\na\tnatural\tutf8\ta.txt\n");
  const auto first = run(dir, "analyze --manifest " + quoted(dir / "m.tsv") + " --out " + quoted(dir / "o1"));
  const auto second = run(dir, "analyze --manifest " + quoted(dir / "m.tsv") + " --out " + quoted(dir / "o2"));
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_LT(first.out.find("\"label\": \"b\""), first.out.find("\"label\": \"a\""));
  for (const auto& entry : std::filesystem::directory_iterator(dir / "o1")) {
    EXPECT_EQ(read_bytes(entry.path()), read_bytes(dir / "o2" / entry.path().filename()));
  }
}

TEST(Cli, EmptyManifest) {
  TempDir dir;
  write_bytes(dir / "m.tsv", "");
  const auto r = run(dir, "analyze --manifest " + quoted(dir / "m.tsv") + " --out " + quoted(dir / "o"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"corpora\": [], \"amalgamated\": null}\n");
}

TEST(Cli, DumpTokens) {
  TempDir dir;
  write_bytes(dir / "x.java", "int x = 1; // note\n");
  const auto r = run(dir, "analyze --input " + quoted(dir / "x.java") + " --mode java --dump-tokens");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "INT\nX\n=\n1\n;\n");
}

TEST(Cli, Digits) {
  TempDir dir;
  write_bytes(dir / "counts.txt", "1\n1\n25\n\n7\n");
  const auto r = run(dir, "digits --input " + quoted(dir / "counts.txt") + " --format json");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"n_items\": 4"), std::string::npos);
  EXPECT_NE(r.out.find("\"counts\": [2, 1, 0, 0, 0, 0, 1, 0, 0]"), std::string::npos) << r.out;
  const auto tsv = run(dir, "digits --input " + quoted(dir / "counts.txt"));
  EXPECT_NE(tsv.out.find("digit\tempirical_proportion\tbenford_proportion\n1\t0.500000\t0.301030\n"),
            std::string::npos);
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  EXPECT_EQ(run(dir, "").code, 1);
  EXPECT_EQ(run(dir, "analyze").code, 1);
  EXPECT_EQ(run(dir, "analyze --input x.txt").code, 1);
  EXPECT_EQ(run(dir, "analyze --input x.txt --mode natural --full-window 5").code, 1);
  EXPECT_EQ(run(dir, "analyze --input x.txt --mode natural --drop-top 10 --dropped-window 5:50").code, 1);
  EXPECT_EQ(run(dir, "synth --n 10 --total 5 --out " + quoted(dir / "s.txt")).code, 1);
  EXPECT_EQ(run(dir, "--help").code, 0);

  write_bytes(dir / "dup.tsv", "a\tnatural\tx.txt\na\tnatural\ty.txt\n");
  EXPECT_EQ(run(dir, "analyze --manifest " + quoted(dir / "dup.tsv")).code, 1);

  EXPECT_EQ(run(dir, "analyze --input " + quoted(dir / "missing.txt") + " --mode natural").code, 2);
  write_bytes(dir / "bad.txt", "\xFF\xFE");
  EXPECT_EQ(run(dir, "analyze --input " + quoted(dir / "bad.txt") + " --mode natural").code, 2);
  write_bytes(dir / "neg.txt", "5\n-3\n");
  EXPECT_EQ(run(dir, "digits --input " + quoted(dir / "neg.txt")).code, 2);

  write_bytes(dir / "tiny.txt", "a b a");
  const auto tiny = run(dir, "analyze --input " + quoted(dir / "tiny.txt") + " --mode natural --out " +
                                 quoted(dir / "o"));
  EXPECT_EQ(tiny.code, 3);
  EXPECT_NE(tiny.err.find("corpus 'tiny'"), std::string::npos) << tiny.err;
  write_bytes(dir / "ones.txt", "1\n1\n");
  EXPECT_EQ(run(dir, "digits --input " + quoted(dir / "ones.txt")).code, 0);
  write_bytes(dir / "flat.txt", "1\n2\n3\n4\n5\n6\n7\n8\n9\n");
  EXPECT_EQ(run(dir, "digits --input " + quoted(dir / "flat.txt")).code, 3);
}

} // namespace
} // namespace zipfben
