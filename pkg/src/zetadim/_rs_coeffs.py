"""Riemann-Siegel remainder coefficients, generated by tools/gen_rs_coeffs.py.

RS_COEFFS[k] holds C_k as a polynomial in w = z*z (z = frac(sqrt(t/2pi)) - 1/2),
lowest power first. Odd k carry an extra factor z. Do not edit by hand.
"""

RS_COEFFS = (
    (
        0.3826834323650898,
        1.7489618723100817,
        2.118025207685496,
        -0.8707216670511481,
        -3.4733112243465167,
        -1.6626947308999325,
        1.216731288919232,
        1.3014304161007977,
        0.03051102182736167,
        -0.3755803051545095,
        -0.1085784416564066,
        0.051832902999549624,
        0.029999480619902277,
        -0.0022759396706125644,
        -0.004382647416580339,
        -0.0004064230183729847,
        0.0004006097785422114,
        8.971057991388841e-05,
        -2.3025650027239108e-05,
        -9.380006601906792e-06,
        6.323514947609108e-07,
        6.551022819231502e-07,
    ),
    (
        -0.053650205256750697,
        0.11027818741081483,
        1.2317200154315227,
        1.2634964862799458,
        -1.695108997559503,
        -2.9998711967650102,
        -0.10819944959899208,
        1.9407662946212714,
        0.7838423561500687,
        -0.5054829667900366,
        -0.38450723496057976,
        0.03747264646531532,
        0.09092026610973176,
        0.01044923755006451,
        -0.012582979651583417,
        -0.003399503721151274,
        0.0010410950537714891,
        0.0005010949051118486,
        -3.956359669003182e-05,
        -4.7624592453571896e-05,
        -1.8539355338085133e-06,
        3.1936918080068973e-06,
    ),
    (
        0.005188542830293168,
        0.0012378633552253898,
        -0.18137505725166997,
        0.14291492748532125,
        1.3303391766687565,
        0.3522472353403734,
        -2.421001595891951,
        -1.6760787022538108,
        1.3689416723328371,
        1.5539019430222982,
        -0.1722164273472998,
        -0.6359068055045431,
        -0.09911649873041208,
        0.14033480067387008,
        0.04782352019827292,
        -0.017356040641479782,
        -0.010225012534028593,
        0.0009274149159794888,
        0.0013572194372373386,
        6.41369012029388e-05,
        -0.0001230080569819663,
        -1.83135074047892e-05,
        7.821628604322627e-06,
    ),
    (
        -0.0026794321814389136,
        0.02995372109103515,
        -0.042570172541828696,
        -0.28997965779803886,
        0.4888831999235446,
        1.230855876395746,
        -0.8297560708527408,
        -2.249763536666567,
        0.07845139961005472,
        1.7467492800868893,
        0.45968080979749937,
        -0.6619353471039775,
        -0.31590441036173633,
        0.12844792545207495,
        0.10073382716626152,
        -0.009530183848825268,
        -0.019264421687514088,
        -0.001246463715876929,
        0.0024243969641103086,
        0.000437647697741857,
        -0.00020714032687001792,
        -6.274344504186516e-05,
        1.157534381459567e-05,
    ),
    (
        0.00046483389361763383,
        -0.004022642946136188,
        0.003847177051796127,
        0.06581175135809486,
        -0.19604124343694448,
        -0.20854053686358853,
        0.9507754185141751,
        0.5341535312914873,
        -1.67634944117634,
        -1.076747157875129,
        1.235339301656597,
        1.0257825340057276,
        -0.40124095793988546,
        -0.5036663995108304,
        0.03573487795502745,
        0.14431763086785418,
        0.01509152741790347,
        -0.026098874779194363,
        -0.006126628379519262,
        0.003077503129870841,
        0.0011562478934088753,
        -0.00022775966758472127,
        -0.00014189637118181445,
        7.4648603079559195e-06,
    ),
    (
        0.00022686811845737363,
        0.0011081246853718388,
        -0.016218579255550092,
        0.052765034053987414,
        0.02570880200903324,
        -0.38058660440806397,
        0.22531987892642316,
        1.0344573316495222,
        -0.5528257697050813,
        -1.5287712641078073,
        0.32828366427719585,
        1.229110218540087,
        0.040936939383115295,
        -0.558604047264202,
        -0.11241976368059116,
        0.1521267771179559,
        0.051737188455280386,
        -0.025612276897007284,
        -0.012963672514046178,
        0.0025455574818611633,
        0.0021193319510877775,
        -9.191391945156778e-05,
        -0.00024413466533855272,
        -1.3697982692283388e-05,
    ),
    (
        3.369099840108094e-05,
        -0.00048730387277374067,
        0.0034913041151209494,
        -0.010636181410824536,
        -0.007962052861482919,
        0.1237587562368654,
        -0.1849404122581205,
        -0.30393580239679546,
        0.7612833126395632,
        0.4067440568556812,
        -1.2301721808541708,
        -0.5117640855696522,
        0.9962463615472547,
        0.47056716161861106,
        -0.4414445866526114,
        -0.25918493310535273,
        0.11117688993542343,
        0.08794868546608423,
        -0.014803271886103406,
        -0.01961041509857541,
        0.00031650099641031916,
        0.0030274014208229155,
        0.0002675580524826069,
        -0.0003349691662856058,
        -5.891092180278285e-05,
    ),
    (
        6.612479918279905e-05,
        -0.00044670409577338735,
        0.0010840232068089312,
        0.005028543891765806,
        -0.03886148551530864,
        0.07707956741410073,
        0.06355969744063397,
        -0.4074596273039508,
        0.1803375211195864,
        0.8064302485606453,
        -0.5178358018314444,
        -0.9482271795820716,
        0.4719558561190385,
        0.7154101522815643,
        -0.19296662747432222,
        -0.3455616621306974,
        0.02925214982106185,
        0.10909301099694024,
        0.005308465692352872,
        -0.023293443630578295,
        -0.0035166634161813027,
        0.0034648237370005506,
        0.0008444826314873812,
        -0.00036395433452081826,
        -0.00012779454521633608,
    ),
    (
        2.4197536136117965e-06,
        -1.611352277070405e-05,
        0.0002171808253299485,
        -0.0023441555503488335,
        0.01155263179636765,
        -0.02392447916109697,
        -0.015530804396368813,
        0.16805457215955893,
        -0.20767893102427126,
        -0.2705105627343296,
        0.6603245174239842,
        0.17484629360273835,
        -0.9023846153142663,
        -0.09498217340106974,
        0.7024752578716655,
        0.09268759838045737,
        -0.3377367994776856,
        -0.06840303526873472,
        0.10495507688894251,
        0.029655264579902616,
        -0.021780178965591507,
        -0.008154606200067588,
        0.0030590899165112884,
        0.001535812550622837,
        -0.000282016450085498,
        -0.00020917807822471457,
    ),
)
