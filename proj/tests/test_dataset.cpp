#include <doctest.h>

#include <fstream>
#include <functional>
#include <random>

#include <json.hpp>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "test_util.hpp"
#include "vseval/dataset.hpp"
#include "vseval/errors.hpp"

using namespace vseval;
namespace tu = vseval::testutil;
namespace fs = std::filesystem;

namespace {

void write_solid_image(const fs::path& path, int side, std::uint8_t r, std::uint8_t g,
                       std::uint8_t b) {
  if (path.extension() == ".ppm") {
    std::vector<std::uint8_t> px;
    for (int i = 0; i < side * side; ++i) {
      px.push_back(r);
      px.push_back(g);
      px.push_back(b);
    }
    write_ppm(path, side, side, px);
    return;
  }
  const cv::Mat img(side, side, CV_8UC3, cv::Scalar(b, g, r));  // OpenCV is BGR
  REQUIRE(cv::imwrite(path.string(), img));
}

void write_manifest_json(const fs::path& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  out << doc.dump(2);
}

nlohmann::json summary_ref(const std::string& label, const std::string& dir) {
  return {{"label", label}, {"dir", dir}};
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const EvalError& e) {
    return e.code();
  }
  FAIL("expected an EvalError");
  return ErrorCode::IoFailure;
}

}  // namespace

TEST_SUITE("dataset_io") {

TEST_CASE("frame ids come from the longest trailing digit run") {
  CHECK(frame_id_from_name("frame1921") == 1921);
  CHECK(frame_id_from_name("v2_shot_0042") == 42);
  CHECK(frame_id_from_name("7") == 7);
  CHECK(frame_id_from_name("frame001") == 1);
  CHECK_FALSE(frame_id_from_name("frame12a").has_value());
  CHECK_FALSE(frame_id_from_name("cover").has_value());
  CHECK_FALSE(frame_id_from_name("").has_value());
}

TEST_CASE("decode reads every supported format and honors filename ids") {
  tu::TempDir tmp("decode_formats");
  write_solid_image(tmp.path() / "frame0005.png", 8, 10, 200, 30);
  write_solid_image(tmp.path() / "frame1921.jpeg", 8, 10, 200, 30);
  write_solid_image(tmp.path() / "shot12.bmp", 8, 10, 200, 30);
  write_solid_image(tmp.path() / "frame3.ppm", 8, 10, 200, 30);

  const FrameImage png = decode_frame(tmp.path() / "frame0005.png");
  CHECK(png.frame_id == 5);
  CHECK(png.width == 8);
  CHECK(png.height == 8);
  CHECK(png.pixels[0] == 10);
  CHECK(png.pixels[1] == 200);
  CHECK(png.pixels[2] == 30);

  CHECK(decode_frame(tmp.path() / "frame1921.jpeg").frame_id == 1921);
  CHECK(decode_frame(tmp.path() / "shot12.bmp").frame_id == 12);
  const FrameImage ppm = decode_frame(tmp.path() / "frame3.ppm");
  CHECK(ppm.frame_id == 3);
  CHECK(ppm.pixels[0] == 10);  // lossless formats keep exact values
  CHECK(ppm.pixels[1] == 200);
  CHECK(ppm.pixels[2] == 30);
}

TEST_CASE("one-by-one white png decodes to a single white pixel") {
  tu::TempDir tmp("decode_tiny");
  write_solid_image(tmp.path() / "white.png", 1, 255, 255, 255);
  const FrameImage img = decode_frame(tmp.path() / "white.png");
  CHECK(img.width == 1);
  CHECK(img.height == 1);
  CHECK(img.pixels == std::vector<std::uint8_t>{255, 255, 255});
}

TEST_CASE("decode is deterministic for identical bytes") {
  tu::TempDir tmp("decode_det");
  write_solid_image(tmp.path() / "frame1.png", 16, 1, 2, 3);
  fs::copy_file(tmp.path() / "frame1.png", tmp.path() / "frame2.png");
  const FrameImage a1 = decode_frame(tmp.path() / "frame1.png");
  const FrameImage a2 = decode_frame(tmp.path() / "frame1.png");
  const FrameImage b = decode_frame(tmp.path() / "frame2.png");
  CHECK(a1.pixels == a2.pixels);
  CHECK(a1.frame_id == a2.frame_id);
  CHECK(a1.pixels == b.pixels);
}

TEST_CASE("unsupported and corrupt files are rejected with the right codes") {
  tu::TempDir tmp("decode_errors");
  write_solid_image(tmp.path() / "frame1.png", 8, 9, 9, 9);

  std::ofstream(tmp.path() / "notes.txt") << "not an image";
  CHECK(code_of([&] { decode_frame(tmp.path() / "notes.txt"); }) ==
        ErrorCode::UnsupportedFormat);

  // a truncated jpeg: valid extension, undecodable bytes
  write_solid_image(tmp.path() / "frame2.jpg", 32, 1, 2, 3);
  {
    std::ifstream in(tmp.path() / "frame2.jpg", std::ios::binary);
    std::vector<char> head(64);
    in.read(head.data(), 64);
    std::ofstream out(tmp.path() / "broken.jpg", std::ios::binary | std::ios::trunc);
    out.write(head.data(), in.gcount());
  }
  CHECK(code_of([&] { decode_frame(tmp.path() / "broken.jpg"); }) == ErrorCode::CorruptImage);

  CHECK(code_of([&] { decode_frame(tmp.path() / "missing.png"); }) == ErrorCode::IoFailure);
}

TEST_CASE("summary enumeration sorts by frame id with lexicographic fallback") {
  tu::TempDir tmp("enumerate");
  write_solid_image(tmp.path() / "b10.ppm", 4, 0, 0, 0);
  write_solid_image(tmp.path() / "a4.ppm", 4, 0, 0, 0);
  write_solid_image(tmp.path() / "c.ppm", 4, 0, 0, 0);  // no digits -> position 2

  const std::vector<NamedFrame> frames = enumerate_summary_frames(tmp.path());
  REQUIRE(frames.size() == 3);
  CHECK(frames[0].frame_id == 2);  // fallback id equals the lexicographic position
  CHECK(frames[0].path.filename() == "c.ppm");
  CHECK(frames[1].frame_id == 4);
  CHECK(frames[1].path.filename() == "a4.ppm");
  CHECK(frames[2].frame_id == 10);
}

TEST_CASE("duplicate frame ids in one summary are an error") {
  tu::TempDir tmp("dup_ids");
  write_solid_image(tmp.path() / "a7.ppm", 4, 0, 0, 0);
  write_solid_image(tmp.path() / "b07.ppm", 4, 0, 0, 0);
  CHECK(code_of([&] { enumerate_summary_frames(tmp.path()); }) == ErrorCode::DuplicateFrameId);
}

TEST_CASE("manifest loading resolves directories and counts pairs") {
  tu::TempDir tmp("manifest_ok");
  fs::create_directories(tmp.path() / "auto1");
  fs::create_directories(tmp.path() / "user1");
  fs::create_directories(tmp.path() / "user2");
  write_solid_image(tmp.path() / "auto1" / "frame1.ppm", 4, 1, 1, 1);
  write_solid_image(tmp.path() / "user1" / "frame1.ppm", 4, 1, 1, 1);
  write_solid_image(tmp.path() / "user2" / "frame1.ppm", 4, 1, 1, 1);

  write_manifest_json(tmp.path() / "manifest.json",
                      {{"videos",
                        {{{"id", "v1"},
                          {"automatic", {summary_ref("m1", "auto1")}},
                          {"user", {summary_ref("u1", "user1"), summary_ref("u2", "user2")}}}}}});

  const EvaluationJob job = load_manifest(tmp.path() / "manifest.json");
  REQUIRE(job.videos.size() == 1);
  CHECK(job.videos[0].automatic.size() == 1);
  CHECK(job.videos[0].user.size() == 2);
  CHECK(job.pair_count() == 2);
  CHECK(fs::equivalent(job.videos[0].automatic[0].dir, tmp.path() / "auto1"));
}

TEST_CASE("manifest for a 50-video, 5-user layout yields 250 pairs") {
  tu::TempDir tmp("manifest_big");
  nlohmann::json videos = nlohmann::json::array();
  // one shared frame directory keeps the fixture light
  fs::create_directories(tmp.path() / "frames");
  write_solid_image(tmp.path() / "frames" / "frame1.ppm", 4, 5, 5, 5);
  for (int v = 1; v <= 50; ++v) {
    nlohmann::json users = nlohmann::json::array();
    for (int u = 1; u <= 5; ++u) {
      users.push_back(summary_ref("user" + std::to_string(u), "frames"));
    }
    videos.push_back({{"id", "v" + std::to_string(v)},
                      {"automatic", {summary_ref("auto", "frames")}},
                      {"user", users}});
  }
  write_manifest_json(tmp.path() / "manifest.json", {{"videos", videos}});
  const EvaluationJob job = load_manifest(tmp.path() / "manifest.json");
  CHECK(job.videos.size() == 50);
  CHECK(job.pair_count() == 250);
}

TEST_CASE("manifest error paths carry the offending context") {
  tu::TempDir tmp("manifest_bad");
  CHECK(code_of([&] { load_manifest(tmp.path() / "nowhere.json"); }) ==
        ErrorCode::ManifestNotFound);

  write_manifest_json(tmp.path() / "empty.json", nlohmann::json::object());
  CHECK(code_of([&] { load_manifest(tmp.path() / "empty.json"); }) == ErrorCode::SchemaViolation);

  std::ofstream(tmp.path() / "broken.json") << "{not json";
  CHECK(code_of([&] { load_manifest(tmp.path() / "broken.json"); }) ==
        ErrorCode::SchemaViolation);

  // a referenced directory with no images
  fs::create_directories(tmp.path() / "auto1");
  fs::create_directories(tmp.path() / "empty_dir");
  write_solid_image(tmp.path() / "auto1" / "frame1.ppm", 4, 1, 1, 1);
  write_manifest_json(tmp.path() / "empty_dir.json",
                      {{"videos",
                        {{{"id", "v1"},
                          {"automatic", {summary_ref("m1", "auto1")}},
                          {"user", {summary_ref("u1", "empty_dir")}}}}}});
  bool saw_dir_name = false;
  try {
    load_manifest(tmp.path() / "empty_dir.json");
  } catch (const EvalError& e) {
    CHECK(e.code() == ErrorCode::EmptySummaryDirectory);
    saw_dir_name = std::string(e.what()).find("empty_dir") != std::string::npos;
  }
  CHECK(saw_dir_name);

  // duplicate (video, label)
  write_manifest_json(tmp.path() / "dup.json",
                      {{"videos",
                        {{{"id", "v1"},
                          {"automatic", {summary_ref("same", "auto1")}},
                          {"user", {summary_ref("same", "auto1")}}}}}});
  CHECK(code_of([&] { load_manifest(tmp.path() / "dup.json"); }) == ErrorCode::SchemaViolation);
}

}  // TEST_SUITE
