#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace testsupport;

TEST(Fox, DihedralMatrixMatchesClosedForm) {
  for (int n = 2; n <= 8; ++n) {
    GroupPtr g = build_dihedral(n);
    PresentationComplex c = presentation_complex(default_presentation(*g), g);
    EXPECT_EQ(c.d2, dihedral_d2(g)) << "n = " << n;
    EXPECT_EQ(c.d1(0, 0), parse_ring_element(g, "x - 1"));
    EXPECT_EQ(c.d1(1, 0), parse_ring_element(g, "y - 1"));
  }
}

TEST(Fox, InverseLetters) {
  GroupPtr g = build_cyclic(5);
  // d(x^-1)/dx = -x^-1
  Word w{{0, -1}};
  EXPECT_EQ(fox_derivative(w, 0, g), -RingElement::element(g, g->inv(g->generator(0))));
  EXPECT_THROW(fox_derivative(w, 1, g), UnknownGenerator);
}

TEST(Fox, CyclicResolution) {
  GroupPtr g = build_cyclic(4);
  PresentationComplex c = presentation_complex(default_presentation(*g), g);
  EXPECT_EQ(c.d2(0, 0), norm_element(g));
}

TEST(Fox, PresentationParsing) {
  Presentation p = parse_presentation("<x, y | x^4*y^-2, x*y*x*y^-1, y^2>");
  EXPECT_EQ(p.generators.size(), 2u);
  ASSERT_EQ(p.relators.size(), 3u);
  EXPECT_EQ(p.relators[0].size(), 6u);
  EXPECT_EQ(p.str(), "<x, y | x^4*y^-2, x*y*x*y^-1, y^2>");
  EXPECT_EQ(parse_presentation("<a | (a*a)^3>").relators[0].size(), 6u);
  EXPECT_EQ(parse_presentation("<a | >").relators.size(), 0u);
  try {
    parse_presentation("<x, y | x*w>");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 10u);
  }
  EXPECT_THROW(parse_presentation("<x, x | x>"), ParseError);
  EXPECT_THROW(parse_presentation("<x | x^>"), ParseError);
  EXPECT_THROW(parse_presentation("<x | x> junk"), ParseError);
}

TEST(Fox, ComplexValidation) {
  GroupPtr g = build_dihedral(4);
  EXPECT_THROW(presentation_complex(parse_presentation("<x, y | x^3>"), g), InvalidPresentation);
  EXPECT_THROW(presentation_complex(parse_presentation("<x | x^4>"), g), InvalidPresentation);
  PresentationComplex c = presentation_complex(parse_presentation(std::string(kCounterexamplePresentation)),
                                               direct_product(build_dihedral(4), build_cyclic(2)));
  EXPECT_EQ(c.d2.rows(), 6u);
  EXPECT_EQ(c.d2.cols(), 3u);
}

TEST(Fox, DualIsInvolutionTranspose) {
  GroupPtr g = build_dihedral(4);
  ZPiMatrix d = dihedral_d2(g).dual();
  EXPECT_EQ(d.rows(), 2u);
  EXPECT_EQ(d(0, 1), parse_ring_element(g, "1 + y*x^-1"));
  EXPECT_EQ(d.dual(), dihedral_d2(g));
}

TEST(Fox, MatrixDumpRoundTrip) {
  GroupPtr g = build_dihedral(4);
  IntMatrix m = zpi_matrix_to_map(dihedral_d2(g)).matrix();
  std::stringstream ss;
  write_matrix(ss, m);
  EXPECT_EQ(read_matrix(ss), m);
}
