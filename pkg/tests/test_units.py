"""Tests for constants, the molecule registry, and eV conversion."""

import math

import pytest

from golden_tables import TABLE2, TABLE3
from mrbound.centrifugal import CASE1, solve_coefficients
from mrbound.potential import PotentialParams
from mrbound.spectrum import QuantumState, UnboundStateError, hulthen_energy
from mrbound.units import (
    LENGTH_UNITS_PM,
    Molecule,
    RegistryFormatError,
    UnitSystem,
    UnknownMoleculeError,
    energy_scale_eV,
    get_molecule,
    load_molecules,
    parse_constants_file,
    table_energy_eV,
)

CASE1_SCHEME = solve_coefficients(CASE1)


class TestRegistry:
    def test_bundled_species(self):
        reg = load_molecules()
        assert set(reg) == {"HCl", "CH", "LiH", "CO"}
        assert reg["HCl"].reduced_mass_amu == pytest.approx(0.9801045)
        assert reg["CH"].reduced_mass_amu == pytest.approx(0.929931)
        assert reg["LiH"].reduced_mass_amu == pytest.approx(0.8801221)
        assert reg["CO"].reduced_mass_amu == pytest.approx(6.8606719)

    def test_unknown_molecule(self):
        with pytest.raises(UnknownMoleculeError):
            get_molecule("XeF6")

    def test_custom_registry_file(self, tmp_path):
        path = tmp_path / "species.dat"
        path.write_text("format = 1\n# comment\nD2 = 1.00705\n")
        reg = load_molecules(path)
        assert reg["D2"].reduced_mass_amu == pytest.approx(1.00705)

    @pytest.mark.parametrize(
        "content",
        [
            "D2 = 1.0\n",  # missing format header
            "format = 2\nD2 = 1.0\n",  # unsupported version
            "format = 1\nD2 1.0\n",  # missing '='
            "format = 1\nD2 = heavy\n",  # non-numeric mass
        ],
    )
    def test_malformed_registry(self, tmp_path, content):
        path = tmp_path / "bad.dat"
        path.write_text(content)
        with pytest.raises(RegistryFormatError):
            load_molecules(path)

    def test_molecule_validation(self):
        with pytest.raises(ValueError):
            Molecule(name="X", reduced_mass_amu=-1.0)
        with pytest.raises(ValueError):
            Molecule(name="", reduced_mass_amu=1.0)


class TestUnitSystem:
    def test_defaults(self):
        u = UnitSystem()
        assert u.hbar_c_eV_A == pytest.approx(1973.29)
        assert u.amu_eV == pytest.approx(9.31494e8)
        assert u.hbar_c_eV_pm == pytest.approx(197329.0)

    def test_validation(self):
        with pytest.raises(ValueError):
            UnitSystem(hbar_c_eV_A=-1.0)
        with pytest.raises(ValueError):
            UnitSystem(length_unit="furlong")

    @pytest.mark.parametrize("unit", sorted(LENGTH_UNITS_PM))
    def test_length_round_trip(self, unit):
        u = UnitSystem(length_unit=unit)
        x = 123.456
        assert u.length_from_pm(u.length_to_pm(x)) == pytest.approx(x, rel=1e-12)


class TestEnergyScale:
    def test_hcl_reference_value(self):
        # independent arithmetic: 197329^2 / (2 * 0.9801045 * 9.31494e8 * 40^2)
        u = UnitSystem()
        scale = energy_scale_eV(get_molecule("HCl"), 40.0, u)
        assert scale == pytest.approx(1.3328435e-2, rel=1e-6)

    def test_inverse_square_b_law(self):
        u = UnitSystem()
        mol = get_molecule("CH")
        assert energy_scale_eV(mol, 80.0, u) == pytest.approx(
            energy_scale_eV(mol, 40.0, u) / 4.0, rel=1e-14
        )

    def test_inverse_mass_law(self):
        u = UnitSystem()
        ratio = energy_scale_eV(get_molecule("CO"), 40.0, u) / energy_scale_eV(
            get_molecule("HCl"), 40.0, u
        )
        assert ratio == pytest.approx(0.9801045 / 6.8606719, rel=1e-14)

    def test_bad_b(self):
        with pytest.raises(ValueError):
            energy_scale_eV(get_molecule("HCl"), 0.0, UnitSystem())


class TestTableEnergy:
    @pytest.mark.parametrize(
        "mol,label,inv_b,alpha,table",
        [
            ("HCl", "2p", 0.025, 0.75, TABLE2),
            ("CO", "2p", 0.025, 0.75, TABLE3),
            ("LiH", "2p", 0.025, 1.0, TABLE3),
            ("CH", "6g", 0.025, 1.5, TABLE2),
        ],
    )
    def test_reference_cells(self, mol, label, inv_b, alpha, table):
        key = (mol, label, inv_b, "0,1" if alpha in (0.0, 1.0) else f"{alpha:g}")
        e = table_energy_eV(
            get_molecule(mol), QuantumState.from_label(label), alpha, inv_b, CASE1_SCHEME
        )
        assert e == pytest.approx(table[key], rel=5e-4)

    @pytest.mark.parametrize("alpha", [0.0, 1.0])
    def test_screened_column_equals_hulthen_path(self, alpha):
        # alpha in {0, 1} must go through the same arithmetic as the
        # dedicated screened-Coulomb formula
        u = UnitSystem()
        mol = get_molecule("LiH")
        st = QuantumState.from_label("3d")
        inv_b = 0.05
        b = 1.0 / inv_b
        via_table = table_energy_eV(mol, st, alpha, inv_b, CASE1_SCHEME, u)
        p = PotentialParams(A=2.0 * b, alpha=alpha, b=b)
        dimensionless = -hulthen_energy(p, st, CASE1_SCHEME) / p.energy_scale
        via_hulthen = energy_scale_eV(mol, b, u) * dimensionless
        assert via_table == pytest.approx(via_hulthen, rel=1e-14)

    def test_au_ev_round_trip(self):
        # converting the dimensionless level via the eV scale and back is
        # the identity
        u = UnitSystem()
        mol = get_molecule("CH")
        st = QuantumState.from_label("4d")
        inv_b = 0.05
        b = 1.0 / inv_b
        p = PotentialParams(A=2.0 * b, alpha=1.5, b=b)
        from mrbound.spectrum import energy_level

        e_au = energy_level(p, st, CASE1_SCHEME).energy
        scale = energy_scale_eV(mol, b, u) / p.energy_scale
        assert (e_au * scale) / scale == pytest.approx(e_au, rel=1e-12)

    def test_unbound(self):
        with pytest.raises(UnboundStateError):
            table_energy_eV(
                get_molecule("HCl"), QuantumState.from_label("2p"), 0.75, 10.0, CASE1_SCHEME
            )

    def test_bad_inv_b(self):
        with pytest.raises(ValueError):
            table_energy_eV(
                get_molecule("HCl"), QuantumState.from_label("2p"), 0.75, -1.0, CASE1_SCHEME
            )


class TestConstantsFile:
    def test_overrides(self, tmp_path):
        path = tmp_path / "constants.txt"
        path.write_text("hbar_c_eV_A = 1973.0\nlength_unit = angstrom\n")
        u = parse_constants_file(path)
        assert u.hbar_c_eV_A == pytest.approx(1973.0)
        assert u.length_unit == "angstrom"
        assert u.amu_eV == pytest.approx(9.31494e8)  # untouched default

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "constants.txt"
        path.write_text("planck = 6.6e-34\n")
        with pytest.raises(RegistryFormatError):
            parse_constants_file(path)

    def test_bad_value(self, tmp_path):
        path = tmp_path / "constants.txt"
        path.write_text("amu_eV = many\n")
        with pytest.raises(RegistryFormatError):
            parse_constants_file(path)

    def test_amu_constant_moves_the_tables(self, tmp_path):
        # the amu -> eV constant is configurable and feeds straight into
        # the eV scale
        u2 = UnitSystem(amu_eV=9.31494e8 * 2.0)
        mol = get_molecule("HCl")
        assert energy_scale_eV(mol, 40.0, u2) == pytest.approx(
            energy_scale_eV(mol, 40.0, UnitSystem()) / 2.0, rel=1e-14
        )
