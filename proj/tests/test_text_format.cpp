/*
   Copyright 2026 The mosls Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <mosls/construct.hpp>
#include <mosls/text_format.hpp>

#include "test_support.hpp"

using namespace mosls;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_family(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(TextFormat, RoundTrip) {
    for (const auto& F : {field_mosls({2, 1, 1}), field_mosls({3, 1, 1}), composite_family({{2, 1, 0}, {3, 0, 1}}),
                          field_mosls({2, 1, 2})}) {
        const std::string text = format_family(F);
        EXPECT_EQ(parse_family(text), F);
        EXPECT_EQ(format_family(parse_family(text)), text);
    }
}

TEST(TextFormat, Layout) {
    const auto F = mosls::testing::load("mosls4_pair.txt");
    EXPECT_EQ(format_family(F),
              "mosls v1\norder 4 type 2 2 count 2\n1 2 4 3\n3 4 2 1\n4 3 1 2\n2 1 3 4\n\n1 4 3 2\n3 2 1 4\n4 1 2 3\n2 3 4 1\n");
}

TEST(TextFormat, ToleratesTrailingBlankLinesAndCrlf) {
    const auto F = parse_family("mosls v1\r\norder 2 type 1 2 count 1\r\n1 2\r\n2 1\r\n\r\n\n");
    EXPECT_EQ(F.size(), 1u);
    EXPECT_EQ(F[0](1, 0), 2);
}

TEST(TextFormat, EmptyFamily) {
    const auto F = parse_family("mosls v1\norder 4 type 2 2 count 0\n");
    EXPECT_TRUE(F.empty());
    EXPECT_EQ(F.order(), 4);
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line(""), 1u);
    EXPECT_EQ(error_line("mosls v2\n"), 1u);
    EXPECT_EQ(error_line("mosls v1\n"), 2u);
    EXPECT_EQ(error_line("mosls v1\norder 4 type 2 3 count 1\n"), 2u);
    EXPECT_EQ(error_line("mosls v1\norder 4 type 2 2 count x\n"), 2u);
    EXPECT_EQ(error_line("mosls v1\norder 2 type 1 2 count 1\n1 2\n2\n"), 4u);
    EXPECT_EQ(error_line("mosls v1\norder 2 type 1 2 count 1\n1 2\n2 3\n"), 4u);
    EXPECT_EQ(error_line("mosls v1\norder 2 type 1 2 count 1\n1 2\n2 a\n"), 4u);
    EXPECT_EQ(error_line("mosls v1\norder 2 type 1 2 count 2\n1 2\n2 1\n2 1\n1 2\n"), 5u);
    EXPECT_EQ(error_line("mosls v1\norder 2 type 1 2 count 2\n1 2\n2 1\n\n2 1\n"), 7u);
    EXPECT_EQ(error_line("mosls v1\norder 2 type 1 2 count 1\n1 2\n2 1\n1 2\n"), 5u);
}

TEST(TextFormat, ParserDoesNotJudgeLatinProperty) {
    const auto F = parse_family("mosls v1\norder 2 type 1 2 count 1\n1 1\n2 2\n");
    EXPECT_FALSE(is_latin(F[0]));
}
