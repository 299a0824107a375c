#include "support.hpp"

#include "conewit/io.hpp"

#include <gtest/gtest.h>

using namespace conewit;
using namespace testing_support;

namespace {

TEST(MatrixFile, RoundTripIsBitIdentical) {
  std::mt19937_64 rng(1);
  for (const CMat& a : {choi_ppt_state(), stormer_state(0.5), CMat(random_hermitian(rng, 6), Dims{2, 3})}) {
    const Json j = Json::parse(write_matrix_file(a).dump());
    const CMat b = read_matrix_file(j);
    EXPECT_EQ(b.dims(), a.dims());
    EXPECT_TRUE((b.mat().array() == a.mat().array()).all());
  }
}

TEST(MapFile, ChoiRoundTrip) {
  const LinMap phi = phi_family(1.25, 0.1, 1.0 / 3.0);
  const LinMap back = read_map_file(Json::parse(write_map_file(phi).dump()));
  EXPECT_TRUE((back.choi().mat().array() == phi.choi().mat().array()).all());
}

TEST(MapFile, Family) {
  const LinMap phi = read_map_file(Json::parse(R"({"kind":"family","a":1,"b":0,"c":1})"));
  EXPECT_EQ(phi.dims(), (Dims{3, 3}));
  EXPECT_TRUE(phi.choi().mat().isApprox(family_choi(1, 0, 1)));
}

TEST(MapFile, Kraus) {
  const Json j = Json::parse(R"({"kind":"kraus","m":2,"n":2,
      "cp":[[[1,0],[0,0]],[[0,0],[[0,1],0]]],
      "ccp":[[[0,1],[-1,0]]]})");
  const LinMap phi = read_map_file(j);
  Matrix v1 = Matrix::Zero(2, 2), v2 = Matrix::Zero(2, 2), w = Matrix::Zero(2, 2);
  v1(0, 0) = 1.0;
  v2(1, 0) = cplx(0, 1);
  w(0, 1) = 1.0;
  w(1, 0) = -1.0;
  EXPECT_TRUE(phi.choi().mat().isApprox(choi_of_kraus(Dims{2, 2}, {v1, v2}, {w}).choi().mat()));
}

TEST(Errors, Malformed) {
  EXPECT_THROW(read_matrix_file(Json::parse("[]")), FormatError);
  EXPECT_THROW(read_matrix_file(Json::parse(R"({"m":2,"n":2,"matrix":[[1]]})")), FormatError);
  EXPECT_THROW(read_matrix_file(Json::parse(R"({"m":0,"n":2,"matrix":[]})")), FormatError);
  EXPECT_THROW(read_matrix_file(Json::parse(R"({"m":1,"n":1,"matrix":[[[1,2,3]]]})")), FormatError);
  EXPECT_THROW(read_matrix_file(Json::parse(R"({"m":1,"n":1})")), FormatError);
  EXPECT_THROW(read_map_file(Json::parse(R"({"kind":"banana"})")), FormatError);
  EXPECT_THROW(read_map_file(Json::parse(R"({"kind":"family","a":1,"b":0})")), FormatError);
  EXPECT_THROW(read_map_file(Json::parse(R"({"kind":"family","m":2,"n":3,"a":1,"b":0,"c":1})")), FormatError);
  EXPECT_THROW(read_map_file(Json::parse(R"({"kind":"choi","m":1,"n":2,"matrix":[[0,1],[0,0]]})")),
               FormatError);
}

TEST(Errors, FormatErrorIsDomainError) {
  EXPECT_THROW(read_map_file(Json::parse("3")), DomainError);
}

}  // namespace
