import pytest

from qpburst.device import ChipThermalModel, DeviceParams, QPBath


@pytest.fixture
def big_device():
    # big gap-difference device: d_delta well above h f_q
    return DeviceParams(
        e_j=5.78, e_c=0.34, f_q=3.57, delta=45.2, d_delta=8.2, v_l=99.0, v_h=19.0,
        name="big",
    )


@pytest.fixture
def medium_device():
    return DeviceParams(
        e_j=9.55, e_c=0.35, f_q=4.78, delta=46.1, d_delta=5.8, v_l=122.0, v_h=23.0,
        name="medium",
    )


@pytest.fixture
def small_device():
    return DeviceParams(
        e_j=7.71, e_c=0.35, f_q=4.27, delta=45.1, d_delta=0.0, v_l=108.0, v_h=88.0,
        name="small",
    )


@pytest.fixture
def chip_model():
    return ChipThermalModel(debye_prefactor=0.23, t_debye=1000.0)


@pytest.fixture
def cold_bath():
    return QPBath(temperature=0.025, x_qp_ne=6.3e-10)
