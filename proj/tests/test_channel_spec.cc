// Copyright 2026 The qchdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qchdist/channel_spec.h"

#include <cstdio>
#include <fstream>

#include "gtest/gtest.h"
#include "qchdist/linalg.h"

using namespace qchdist;

TEST(ChannelSpec, ParsesEveryKind) {
  const ChannelSpec pauli = parse_channel_spec(
      R"({"kind":"pauli","qI":0.5,"qx":0.25,"qy":0.25,"qz":0})");
  EXPECT_TRUE(pauli.pauli_type);
  EXPECT_EQ(pauli.weights.qx, 0.25);
  EXPECT_EQ(pauli.channel.kraus.size(), 3);

  const ChannelSpec bit = parse_channel_spec(R"({"kind":"bit_flip","c":0.4})");
  EXPECT_TRUE(bit.pauli_type);
  EXPECT_NEAR(bit.weights.qi, 0.7, 1e-15);
  EXPECT_NEAR(bit.weights.qx, 0.3, 1e-15);

  const ChannelSpec phase =
      parse_channel_spec(R"({"kind":"phase_flip","c":0.4})");
  EXPECT_NEAR(phase.weights.qz, 0.3, 1e-15);

  const ChannelSpec dep = parse_channel_spec(R"({"kind":"depolarizing","p":0.3})");
  EXPECT_TRUE(dep.pauli_type);
  EXPECT_NEAR(dep.channel.affine.at(0, 0), 0.6, 1e-12);

  const ChannelSpec dx =
      parse_channel_spec(R"({"kind":"displacement_x","theta":0.5})");
  EXPECT_FALSE(dx.pauli_type);
  const ChannelSpec dz =
      parse_channel_spec(R"({"kind":"displacement_z","theta":0.5})");
  EXPECT_NEAR(dz.channel.affine.at(2, 3),
              std::sin(0.5) * std::sin(0.5), 1e-12);

  // Kraus form of the phase flip with c = 0: E = (rho + Z rho Z) / 2.
  const double r = 1.0 / std::sqrt(2.0);
  const ChannelSpec kraus = parse_channel_spec(
      R"({"kind":"kraus","operators":[
            [[[0.70710678118654752,0],[0,0]],[[0,0],[0.70710678118654752,0]]],
            [[[0.70710678118654752,0],[0,0]],[[0,0],[-0.70710678118654752,0]]]]})");
  EXPECT_FALSE(kraus.pauli_type);
  EXPECT_EQ(kraus.channel.kraus.size(), 2);
  EXPECT_NEAR(kraus.channel.kraus.operators()[0](0, 0).real(), r, 1e-12);
  // Its affine part is diag[0, 0, 1, 1].
  EXPECT_NEAR(kraus.channel.affine.at(0, 0), 0.0, 1e-12);
  EXPECT_NEAR(kraus.channel.affine.at(2, 2), 1.0, 1e-12);
}

TEST(ChannelSpec, ReadsFromFile) {
  const std::string path = ::testing::TempDir() + "/spec_bitflip.json";
  {
    std::ofstream out(path);
    out << R"({"kind":"bit_flip","c":0.25})";
  }
  const ChannelSpec spec = parse_channel_spec(path);
  EXPECT_EQ(spec.kind, "bit_flip");
  std::remove(path.c_str());
}

TEST(ChannelSpec, DiagnosticsNameTheProblem) {
  const auto expect_message = [](const std::string& text,
                                 const std::string& needle) {
    try {
      parse_channel_spec(text);
      FAIL() << "expected failure for " << text;
    } catch (const std::invalid_argument& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
          << e.what();
    }
  };
  expect_message(R"({"kind":"warp","factor":9})", "unknown kind");
  expect_message(R"({"kind":"bit_flip"})", "missing field 'c'");
  expect_message(R"({"kind":"bit_flip","c":"high"})", "must be a number");
  expect_message(R"({"kind":"bit_flip","c":0.2,"d":1})", "unknown field 'd'");
  expect_message(R"({"kind":"bit_flip","c":1.5})", "outside [0, 1]");
  expect_message(R"({"kind":"kraus","operators":[]})", "nonempty");
  expect_message(R"({"kind":"kraus","operators":[[[[1,0],[0,0]]]]})", "2 rows");
  expect_message(R"({"kind":"kraus","operators":[[[0,0],[0,0]]]})",
                 "[re, im] pair");
  expect_message("{not json", "invalid JSON");
  expect_message("/nonexistent/file.json", "cannot open");
}

TEST(ChannelSpec, RejectsNonTracePreservingKraus) {
  EXPECT_THROW(parse_channel_spec(
                   R"({"kind":"kraus","operators":[
                        [[[1,0],[0,0]],[[0,0],[0.5,0]]]]})"),
               std::invalid_argument);
}

TEST(ChannelSpec, WithParameterRebuilds) {
  const ChannelSpec base =
      parse_channel_spec(R"({"kind":"displacement_z","theta":0.2})");
  const ChannelSpec moved = with_parameter(base, "theta", 0.9);
  EXPECT_NEAR(moved.channel.affine.at(0, 0), std::cos(0.9), 1e-12);
  EXPECT_THROW(with_parameter(base, "p", 0.1), std::invalid_argument);
  // Replacement still validates ranges.
  EXPECT_THROW(with_parameter(base, "theta", 3.0), std::invalid_argument);
}
