"""Test flag value parsing"""

import pytest

from hyperzeta.infrastructure.cli.parsing import parse_complex, parse_float_list


@pytest.mark.infrastructure
@pytest.mark.unit
class TestParseComplex:
    """Test complex flag values"""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("2", 2 + 0j),
            ("-1+2i", -1 + 2j),
            ("0.5-14.1347i", 0.5 - 14.1347j),
            ("3i", 3j),
            ("1e-3+2j", 1e-3 + 2j),
            (" 1 + 2I ", 1 + 2j),
        ],
    )
    def test_accepted_forms(self, text: str, expected: complex) -> None:
        assert parse_complex(text) == expected

    def test_numbers_pass_through(self) -> None:
        # Assert
        assert parse_complex(2) == 2 + 0j
        assert parse_complex(1.5 - 1j) == 1.5 - 1j

    @pytest.mark.parametrize("text", ["", "two", "1+2k", "1,5"])
    def test_rejected_forms(self, text: str) -> None:
        with pytest.raises(ValueError):
            parse_complex(text)


@pytest.mark.infrastructure
@pytest.mark.unit
class TestParseFloatList:
    """Test comma separated lists"""

    def test_values(self) -> None:
        assert parse_float_list("1, 0.5,2") == [1.0, 0.5, 2.0]

    def test_single_value(self) -> None:
        assert parse_float_list("3") == [3.0]

    def test_list_passes_through(self) -> None:
        assert parse_float_list([1, 2]) == [1.0, 2.0]

    @pytest.mark.parametrize("text", ["1,,2", "", "1,x"])
    def test_malformed(self, text: str) -> None:
        with pytest.raises(ValueError):
            parse_float_list(text)
